# task: follow the lane
def follow_lane():
    while True:
        if stop_sign_observed() or pedestrian_observed():
            velocity_publisher(5, -1)
        else:
            stop()
