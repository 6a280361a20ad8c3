# task: cross the intersection
def cross_intersection():
    velocity_publisher(10, 0)
    while True:
        if stop_sign_observed() or car_observed():
            velocity_publisher(3, 1)
        else:
            velocity_publisher(5, -1)
