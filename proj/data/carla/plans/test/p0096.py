# task: follow the lane
def follow_lane():
    if pedestrian_observed() or stop_sign_observed():
        velocity_publisher(5, -1)
    elif green_light_observed():
        stop()
    else:
        velocity_publisher(5, 1)
