# task: cross the intersection
def cross_intersection():
    while True:
        if stop_sign_observed() or green_light_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(5, 1)
