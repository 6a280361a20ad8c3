# task: cross the intersection
def cross_intersection():
    if stop_sign_observed() or car_observed():
        velocity_publisher(3, 1)
    else:
        stop()
