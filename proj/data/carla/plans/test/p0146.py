# task: follow the lane
def follow_lane():
    velocity_publisher(10, 0)
    while True:
        if car_observed():
            stop()
        else:
            velocity_publisher(5, 0)
        sleep(1)
