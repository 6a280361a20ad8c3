# task: cross the intersection
def cross_intersection():
    while True:
        if stop_sign_observed() or red_light_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(5, 0)
