# task: cross the intersection
def cross_intersection():
    while True:
        if pedestrian_observed():
            stop()
        else:
            velocity_publisher(5, 0)
