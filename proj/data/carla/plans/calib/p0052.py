# task: cross the intersection
def cross_intersection():
    if pedestrian_observed() or red_light_observed() or car_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(0, 0)
