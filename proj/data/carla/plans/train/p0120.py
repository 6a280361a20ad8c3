# task: follow the lane
def follow_lane():
    while True:
        if pedestrian_observed() or car_observed() or red_light_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(8, 0)
