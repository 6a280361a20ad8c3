# task: follow the lane
def follow_lane():
    for _ in range(2):
        if red_light_observed():
            stop()
        else:
            velocity_publisher(5, 1)
