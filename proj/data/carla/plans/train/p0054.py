# task: turn right at the intersection
def turn_right():
    velocity_publisher(10, 0)
    while True:
        if pedestrian_observed() or car_observed() or green_light_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(5, -1)
        sleep(1)
