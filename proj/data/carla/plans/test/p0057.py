# task: turn right at the intersection
def turn_right():
    velocity_publisher(10, 0)
    while True:
        if green_light_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(8, 0)
        sleep(1)
