# task: follow the lane
def follow_lane():
    velocity_publisher(10, 0)
    while True:
        if stop_sign_observed() or car_observed() or pedestrian_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(3, 1)
