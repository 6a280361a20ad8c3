# task: follow the lane
def follow_lane():
    while True:
        if car_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(8, 0)
        sleep(1)
