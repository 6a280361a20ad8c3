# task: make a U-turn at the traffic light
def u_turn_light():
    for _ in range(2):
        if car_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(10, 0)
