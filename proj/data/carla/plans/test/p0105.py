# task: follow the lane
def follow_lane():
    if car_observed() or stop_sign_observed() or pedestrian_observed():
        stop()
    else:
        stop()
    sleep(1)
