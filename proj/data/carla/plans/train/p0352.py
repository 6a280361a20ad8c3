# task: follow the lane
def follow_lane():
    if pedestrian_observed():
        stop()
    else:
        velocity_publisher(8, 0)
