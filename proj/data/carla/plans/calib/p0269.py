# task: follow the lane
def follow_lane():
    velocity_publisher(10, 0)
    while True:
        if stop_sign_observed() or red_light_observed() or green_light_observed():
            stop()
        else:
            velocity_publisher(5, 1)
        sleep(1)
