# task: cross the intersection
def cross_intersection():
    while True:
        if stop_sign_observed():
            velocity_publisher(3, 1)
        else:
            velocity_publisher(8, 0)
