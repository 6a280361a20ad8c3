# task: follow the lane
def follow_lane():
    if red_light_observed() or stop_sign_observed():
        stop()
    else:
        velocity_publisher(10, 0)
