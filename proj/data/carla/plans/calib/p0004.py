# task: follow the lane
def follow_lane():
    if car_observed() or red_light_observed():
        stop()
    else:
        velocity_publisher(5, -1)
