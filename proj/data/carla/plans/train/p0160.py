# task: cross the intersection
def cross_intersection():
    if green_light_observed() or pedestrian_observed():
        stop()
    else:
        velocity_publisher(5, -1)
