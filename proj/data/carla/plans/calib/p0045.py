# task: follow the lane
def follow_lane():
    while True:
        if car_observed() or red_light_observed() or pedestrian_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 0)
