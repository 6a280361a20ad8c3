# task: follow the lane
def follow_lane():
    while True:
        if stop_sign_observed() and car_observed():
            velocity_publisher(8, 0)
        else:
            velocity_publisher(10, 0)
