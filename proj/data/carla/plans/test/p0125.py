# task: cross the intersection
def cross_intersection():
    while True:
        if stop_sign_observed() or car_observed():
            stop()
        else:
            velocity_publisher(8, 0)
