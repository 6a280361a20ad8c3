# task: cross the intersection
def cross_intersection():
    while True:
        if stop_sign_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(5, -1)
        sleep(1)
