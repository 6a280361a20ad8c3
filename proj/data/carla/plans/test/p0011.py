# task: turn right at the intersection
def turn_right():
    while True:
        if stop_sign_observed():
            velocity_publisher(0, 0)
        else:
            stop()
