# task: cross the intersection
def cross_intersection():
    for _ in range(4):
        if green_light_observed() or stop_sign_observed() or pedestrian_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(10, 0)
