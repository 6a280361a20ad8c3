# task: cross the intersection
def cross_intersection():
    while True:
        if green_light_observed() or red_light_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(5, 1)
