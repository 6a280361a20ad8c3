# task: follow the lane
def follow_lane():
    for _ in range(2):
        if red_light_observed() or stop_sign_observed():
            velocity_publisher(0, 0)
        else:
            stop()
        sleep(1)
