# task: turn left at the intersection
def turn_left():
    while True:
        if stop_sign_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(8, 0)
