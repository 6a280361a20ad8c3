# task: follow the lane
def follow_lane():
    while True:
        if red_light_observed() or car_observed():
            stop()
        else:
            velocity_publisher(8, 0)
        sleep(1)
