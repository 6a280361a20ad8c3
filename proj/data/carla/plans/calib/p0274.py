# task: follow the lane
def follow_lane():
    while True:
        if stop_sign_observed() or red_light_observed():
            velocity_publisher(0, 0)
        elif red_light_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(10, 0)
        sleep(1)
