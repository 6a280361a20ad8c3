# task: cross the intersection
def cross_intersection():
    for _ in range(4):
        if stop_sign_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(10, 0)
        sleep(1)
