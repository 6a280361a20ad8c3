# task: follow the lane
def follow_lane():
    for _ in range(3):
        if pedestrian_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(8, 0)
        sleep(1)
