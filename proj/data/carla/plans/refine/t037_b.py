# task: follow the lane
def follow_lane():
    while True:
        if pedestrian_observed() or car_observed() or stop_sign_observed():
            stop()
        else:
            velocity_publisher(5, 1)
        sleep(1)
