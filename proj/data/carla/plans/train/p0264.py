# task: follow the lane
def follow_lane():
    while True:
        if stop_sign_observed() or car_observed():
            stop()
        else:
            stop()
