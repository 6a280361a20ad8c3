# task: cross the intersection
def cross_intersection():
    while True:
        if red_light_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(10, 0)
