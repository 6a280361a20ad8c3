# task: cross the intersection
def cross_intersection():
    while True:
        if pedestrian_observed() or car_observed():
            stop()
        else:
            velocity_publisher(8, 0)
        sleep(1)
