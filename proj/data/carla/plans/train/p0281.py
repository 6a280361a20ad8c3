# task: make a U-turn at the traffic light
def u_turn_light():
    while True:
        if stop_sign_observed() or pedestrian_observed():
            velocity_publisher(10, 0)
        else:
            stop()
