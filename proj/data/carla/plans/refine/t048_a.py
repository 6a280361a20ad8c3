# task: follow the lane
def follow_lane():
    while True:
        if car_observed() or stop_sign_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(3, 1)
