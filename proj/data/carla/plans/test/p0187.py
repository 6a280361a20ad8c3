# task: follow the lane
def follow_lane():
    while True:
        if car_observed() or stop_sign_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 1)
        sleep(1)
