# task: follow the lane
def follow_lane():
    while True:
        if car_observed() or green_light_observed():
            stop()
        else:
            velocity_publisher(5, -1)
