# task: cross the intersection
def cross_intersection():
    if stop_sign_observed() or red_light_observed():
        stop()
    else:
        velocity_publisher(3, 1)
