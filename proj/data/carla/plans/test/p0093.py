# task: cross the intersection
def cross_intersection():
    if red_light_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(8, 0)
