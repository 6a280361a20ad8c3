# task: cross the intersection
def cross_intersection():
    if red_light_observed() or car_observed() or pedestrian_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(5, -1)
