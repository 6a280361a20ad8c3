# task: follow the lane
def follow_lane():
    while True:
        if red_light_observed() or pedestrian_observed() or car_observed():
            velocity_publisher(5, -1)
        else:
            stop()
