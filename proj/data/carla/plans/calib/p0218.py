# task: follow the lane
def follow_lane():
    while True:
        if pedestrian_observed():
            stop()
        else:
            stop()
