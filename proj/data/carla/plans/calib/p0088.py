# task: cross the intersection
def cross_intersection():
    velocity_publisher(10, 0)
    while True:
        if pedestrian_observed():
            velocity_publisher(3, 1)
        else:
            velocity_publisher(5, 1)
