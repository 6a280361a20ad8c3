# task: follow the lane
def follow_lane():
    while True:
        if stop_sign_observed() or car_observed():
            velocity_publisher(0, 0)
        elif pedestrian_observed():
            stop()
        else:
            velocity_publisher(3, 1)
