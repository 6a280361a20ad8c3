# task: follow the lane
def follow_lane():
    if green_light_observed():
        velocity_publisher(5, 1)
    else:
        velocity_publisher(3, 1)
    sleep(1)
