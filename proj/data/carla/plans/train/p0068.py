# task: cross the intersection
def cross_intersection():
    while True:
        if car_observed() or pedestrian_observed():
            velocity_publisher(0, 0)
        elif red_light_observed():
            stop()
        else:
            velocity_publisher(8, 0)
