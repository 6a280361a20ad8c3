# task: make a U-turn at the traffic light
def u_turn_light():
    for _ in range(4):
        if stop_sign_observed() or red_light_observed() or pedestrian_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(10, 0)
