# task: cross the intersection
def cross_intersection():
    while True:
        if pedestrian_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(10, 0)
        sleep(1)
