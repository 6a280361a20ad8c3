# task: follow the lane
def follow_lane():
    while True:
        if stop_sign_observed() or red_light_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(5, 1)
        sleep(1)
