# task: follow the lane
def follow_lane():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed():
            velocity_publisher(10, 0)
        else:
            stop()
