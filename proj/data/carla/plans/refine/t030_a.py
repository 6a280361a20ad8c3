# task: cross the intersection
def cross_intersection():
    velocity_publisher(10, 0)
    while True:
        if stop_sign_observed() or car_observed():
            stop()
        else:
            velocity_publisher(5, 0)
