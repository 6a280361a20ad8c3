# task: turn left at the intersection
def turn_left():
    while True:
        if stop_sign_observed():
            velocity_publisher(10, 0)
        else:
            velocity_publisher(5, 0)
