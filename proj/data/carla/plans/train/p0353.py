# task: cross the intersection
def cross_intersection():
    for _ in range(4):
        if stop_sign_observed():
            stop()
        else:
            velocity_publisher(3, 1)
