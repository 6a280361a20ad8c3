# task: follow the lane
def follow_lane():
    if stop_sign_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(5, -1)
