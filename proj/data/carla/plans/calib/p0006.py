# task: cross the intersection
def cross_intersection():
    if red_light_observed():
        stop()
    else:
        velocity_publisher(8, 0)
