# task: turn left at the intersection
def turn_left():
    while True:
        if pedestrian_observed() or stop_sign_observed():
            stop()
        else:
            velocity_publisher(0, 0)
