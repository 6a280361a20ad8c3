# task: turn right at the intersection
def turn_right():
    while True:
        if pedestrian_observed():
            velocity_publisher(3, 1)
        else:
            velocity_publisher(8, 0)
        sleep(1)
