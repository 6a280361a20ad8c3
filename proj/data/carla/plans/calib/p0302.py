# task: follow the lane
def follow_lane():
    if stop_sign_observed() and car_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(3, 1)
