# task: cross the intersection
def cross_intersection():
    for _ in range(2):
        if car_observed() or stop_sign_observed():
            stop()
        else:
            velocity_publisher(10, 0)
