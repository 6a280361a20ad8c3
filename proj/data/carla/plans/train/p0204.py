# task: cross the intersection
def cross_intersection():
    if stop_sign_observed():
        velocity_publisher(0, 0)
    else:
        stop()
    sleep(1)
