# task: follow the lane
def follow_lane():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed() or stop_sign_observed() or car_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 1)
        sleep(1)
