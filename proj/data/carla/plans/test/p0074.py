# task: cross the intersection
def cross_intersection():
    for _ in range(4):
        if stop_sign_observed() and car_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, -1)
