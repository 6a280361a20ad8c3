# task: turn right at the intersection
def turn_right():
    if stop_sign_observed():
        velocity_publisher(5, -1)
    else:
        stop()
