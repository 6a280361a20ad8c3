# task: follow the lane
def follow_lane():
    if car_observed() or pedestrian_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(5, 1)
    sleep(1)
