# task: follow the lane
def follow_lane():
    if stop_sign_observed() or car_observed() or pedestrian_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(8, 0)
