# task: cross the intersection
def cross_intersection():
    for _ in range(3):
        if stop_sign_observed() or car_observed():
            stop()
        else:
            velocity_publisher(10, 0)
