# task: follow the lane
def follow_lane():
    while True:
        if car_observed() or pedestrian_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(8, 0)
