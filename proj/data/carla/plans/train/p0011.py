# task: follow the lane
def follow_lane():
    if car_observed():
        stop()
    else:
        stop()
    sleep(1)
