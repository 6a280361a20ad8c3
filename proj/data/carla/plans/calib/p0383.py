# task: follow the lane
def follow_lane():
    while True:
        if pedestrian_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(8, 0)
        sleep(1)
