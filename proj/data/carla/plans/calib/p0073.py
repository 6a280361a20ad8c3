# task: follow the lane
def follow_lane():
    if pedestrian_observed():
        stop()
    else:
        stop()
    sleep(1)
