# task: follow the lane
def follow_lane():
    for _ in range(4):
        if red_light_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(5, 1)
