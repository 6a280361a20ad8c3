# task: follow the lane
def follow_lane():
    velocity_publisher(10, 0)
    while True:
        if stop_sign_observed():
            velocity_publisher(8, 0)
        else:
            velocity_publisher(5, 1)
