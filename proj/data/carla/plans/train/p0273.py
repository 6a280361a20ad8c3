# task: turn left at the intersection
def turn_left():
    if stop_sign_observed():
        stop()
    else:
        velocity_publisher(3, 1)
    sleep(1)
