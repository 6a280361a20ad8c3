# task: make a U-turn at the traffic light
def u_turn_light():
    while True:
        if car_observed() or pedestrian_observed() or stop_sign_observed():
            velocity_publisher(8, 0)
        else:
            velocity_publisher(5, -1)
