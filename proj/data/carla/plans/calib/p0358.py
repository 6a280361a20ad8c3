# task: turn left at the intersection
def turn_left():
    for _ in range(2):
        if stop_sign_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(3, 1)
