# task: cross the intersection
def cross_intersection():
    while True:
        if pedestrian_observed():
            velocity_publisher(10, 0)
        else:
            velocity_publisher(3, 1)
