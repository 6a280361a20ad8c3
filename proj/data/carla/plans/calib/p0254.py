# task: turn right at the intersection
def turn_right():
    while True:
        if pedestrian_observed() or stop_sign_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(5, 1)
