# task: follow the lane
def follow_lane():
    for _ in range(3):
        if red_light_observed() or car_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(10, 0)
        sleep(1)
