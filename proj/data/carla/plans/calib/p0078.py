# task: follow the lane
def follow_lane():
    while True:
        if pedestrian_observed() or stop_sign_observed():
            stop()
        else:
            velocity_publisher(0, 0)
