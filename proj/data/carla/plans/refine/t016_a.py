# task: cross the intersection
def cross_intersection():
    for _ in range(3):
        if car_observed() or stop_sign_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(5, 0)
        sleep(1)
