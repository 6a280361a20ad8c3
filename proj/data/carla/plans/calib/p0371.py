# task: cross the intersection
def cross_intersection():
    if red_light_observed() or car_observed() or pedestrian_observed():
        stop()
    else:
        velocity_publisher(3, 1)
