# task: cross the intersection
def cross_intersection():
    while True:
        if pedestrian_observed() or stop_sign_observed():
            stop()
        else:
            stop()
        sleep(1)
