# task: cross the intersection
def cross_intersection():
    while True:
        if red_light_observed():
            stop()
        else:
            velocity_publisher(5, 0)
