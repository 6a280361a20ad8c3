# task: cross the intersection
def cross_intersection():
    if stop_sign_observed() and car_observed():
        stop()
    else:
        velocity_publisher(8, 0)
    sleep(1)
