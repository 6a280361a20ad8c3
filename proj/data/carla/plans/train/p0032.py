# task: cross the intersection
def cross_intersection():
    if red_light_observed() or pedestrian_observed() or car_observed():
        velocity_publisher(3, 1)
    else:
        velocity_publisher(8, 0)
