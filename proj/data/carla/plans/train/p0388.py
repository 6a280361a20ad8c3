# task: follow the lane
def follow_lane():
    while True:
        if red_light_observed():
            stop()
        elif car_observed():
            velocity_publisher(0, 0)
        else:
            stop()
        sleep(1)
