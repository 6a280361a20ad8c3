# task: follow the lane
def follow_lane():
    while True:
        if red_light_observed() or car_observed() or stop_sign_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, -1)
