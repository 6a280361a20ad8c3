# task: follow the lane
def follow_lane():
    if stop_sign_observed() or pedestrian_observed():
        stop()
    else:
        velocity_publisher(3, 1)
