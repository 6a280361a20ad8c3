# task: follow the lane
def follow_lane():
    while True:
        if pedestrian_observed() or red_light_observed() or car_observed():
            stop()
        else:
            velocity_publisher(5, -1)
