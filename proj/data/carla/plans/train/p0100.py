# task: follow the lane
def follow_lane():
    if red_light_observed() or car_observed() or pedestrian_observed():
        stop()
    else:
        velocity_publisher(0, 0)
    sleep(1)
