# task: follow the lane
def follow_lane():
    if pedestrian_observed():
        velocity_publisher(0, 0)
    else:
        stop()
