# task: cross the intersection
def cross_intersection():
    while True:
        if pedestrian_observed() or car_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(8, 0)
        sleep(1)
