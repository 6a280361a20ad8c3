# task: follow the lane
def follow_lane():
    for _ in range(2):
        if car_observed() or stop_sign_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(8, 0)
        sleep(1)
