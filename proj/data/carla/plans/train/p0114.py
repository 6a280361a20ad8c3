# task: cross the intersection
def cross_intersection():
    if pedestrian_observed() or red_light_observed() or stop_sign_observed():
        velocity_publisher(3, 1)
    else:
        velocity_publisher(5, 0)
    sleep(1)
