# task: follow the lane
def follow_lane():
    for _ in range(3):
        if green_light_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(3, 1)
