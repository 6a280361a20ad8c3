# task: follow the lane
def follow_lane():
    if red_light_observed() or pedestrian_observed():
        stop()
    else:
        stop()
