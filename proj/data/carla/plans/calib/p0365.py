# task: follow the lane
def follow_lane():
    for _ in range(2):
        if stop_sign_observed() and car_observed():
            velocity_publisher(5, -1)
        elif stop_sign_observed():
            velocity_publisher(5, 1)
        else:
            velocity_publisher(10, 0)
        sleep(1)
