# task: follow the lane
def follow_lane():
    while True:
        if stop_sign_observed():
            stop()
        else:
            velocity_publisher(5, 1)
