# task: follow the lane
def follow_lane():
    if car_observed() or stop_sign_observed():
        stop()
    else:
        velocity_publisher(10, 0)
    sleep(1)
