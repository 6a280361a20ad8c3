# task: follow the lane
def follow_lane():
    for _ in range(3):
        if pedestrian_observed() or stop_sign_observed():
            stop()
        else:
            velocity_publisher(5, 1)
