# task: follow the lane
def follow_lane():
    if car_observed() or stop_sign_observed() or pedestrian_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(5, -1)
