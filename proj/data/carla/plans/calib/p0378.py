# task: cross the intersection
def cross_intersection():
    while True:
        if pedestrian_observed() or stop_sign_observed() or red_light_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 0)
