# task: turn left at the intersection
def turn_left():
    velocity_publisher(10, 0)
    while True:
        if green_light_observed() or red_light_observed() or pedestrian_observed():
            stop()
        elif stop_sign_observed():
            velocity_publisher(8, 0)
        else:
            velocity_publisher(8, 0)
