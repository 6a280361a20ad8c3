# task: make a U-turn at the traffic light
def u_turn_light():
    if car_observed() or pedestrian_observed():
        velocity_publisher(3, 1)
    else:
        velocity_publisher(10, 0)
