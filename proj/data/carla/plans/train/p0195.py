# task: cross the intersection
def cross_intersection():
    if stop_sign_observed() or red_light_observed():
        velocity_publisher(8, 0)
    else:
        velocity_publisher(10, 0)
    sleep(1)
