# task: follow the lane
def follow_lane():
    while True:
        if red_light_observed() or stop_sign_observed():
            stop()
        else:
            velocity_publisher(5, 0)
        sleep(1)
