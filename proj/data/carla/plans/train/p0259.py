# task: cross the intersection
def cross_intersection():
    if stop_sign_observed() or pedestrian_observed() or red_light_observed():
        velocity_publisher(3, 1)
    else:
        velocity_publisher(5, 0)
