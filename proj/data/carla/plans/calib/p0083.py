# task: cross the intersection
def cross_intersection():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed() or stop_sign_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(10, 0)
