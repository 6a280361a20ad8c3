# task: cross the intersection
def cross_intersection():
    while True:
        if pedestrian_observed() or car_observed() or green_light_observed():
            stop()
        else:
            velocity_publisher(10, 0)
