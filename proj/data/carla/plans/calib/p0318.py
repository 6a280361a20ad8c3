# task: follow the lane
def follow_lane():
    if stop_sign_observed():
        velocity_publisher(5, -1)
    elif green_light_observed():
        velocity_publisher(5, 1)
    else:
        stop()
