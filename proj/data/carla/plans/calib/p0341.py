# task: follow the lane
def follow_lane():
    velocity_publisher(10, 0)
    while True:
        if car_observed():
            velocity_publisher(8, 0)
        elif red_light_observed():
            velocity_publisher(3, 1)
        else:
            velocity_publisher(8, 0)
        sleep(1)
