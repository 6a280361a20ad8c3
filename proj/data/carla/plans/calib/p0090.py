# task: cross the intersection
def cross_intersection():
    while True:
        if red_light_observed():
            velocity_publisher(5, 0)
        else:
            stop()
