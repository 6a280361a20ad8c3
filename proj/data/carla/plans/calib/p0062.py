# task: cross the intersection
def cross_intersection():
    for _ in range(3):
        if red_light_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(10, 0)
