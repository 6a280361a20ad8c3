# task: cross the intersection
def cross_intersection():
    if pedestrian_observed() or red_light_observed():
        stop()
    else:
        velocity_publisher(5, 0)
