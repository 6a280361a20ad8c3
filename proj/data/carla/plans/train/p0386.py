# task: follow the lane
def follow_lane():
    while True:
        if stop_sign_observed() and car_observed():
            velocity_publisher(0, 0)
        else:
            stop()
