# task: make a U-turn at the traffic light
def u_turn_light():
    while True:
        if stop_sign_observed() or pedestrian_observed() or green_light_observed():
            stop()
        else:
            velocity_publisher(10, 0)
