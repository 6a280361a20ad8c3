# task: follow the lane
def follow_lane():
    if stop_sign_observed():
        stop()
    else:
        velocity_publisher(3, 1)
    sleep(1)
