# task: cross the intersection
def cross_intersection():
    if pedestrian_observed():
        velocity_publisher(5, 0)
    else:
        velocity_publisher(3, 1)
