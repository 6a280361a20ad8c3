# task: turn left at the intersection
def turn_left():
    if stop_sign_observed():
        velocity_publisher(10, 0)
    else:
        velocity_publisher(8, 0)
