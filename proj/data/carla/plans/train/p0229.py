# task: make a U-turn at the traffic light
def u_turn_light():
    if car_observed() or green_light_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(10, 0)
