# task: turn left at the intersection
def turn_left():
    while True:
        if pedestrian_observed() or stop_sign_observed() or red_light_observed():
            velocity_publisher(5, -1)
        else:
            stop()
