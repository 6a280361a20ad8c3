# task: make a U-turn at the traffic light
def u_turn_light():
    velocity_publisher(10, 0)
    while True:
        if car_observed() or pedestrian_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(3, 1)
