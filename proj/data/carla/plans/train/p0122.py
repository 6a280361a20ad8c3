# task: follow the lane
def follow_lane():
    while True:
        if stop_sign_observed() or car_observed() or pedestrian_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 0)
