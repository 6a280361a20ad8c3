# task: cross the intersection
def cross_intersection():
    if pedestrian_observed() or car_observed() or stop_sign_observed():
        velocity_publisher(10, 0)
    else:
        velocity_publisher(3, 1)
