# task: cross the intersection
def cross_intersection():
    while True:
        if pedestrian_observed() or car_observed() or stop_sign_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(3, 1)
        sleep(1)
