# task: cross the intersection
def cross_intersection():
    if car_observed() or stop_sign_observed():
        stop()
    else:
        stop()
