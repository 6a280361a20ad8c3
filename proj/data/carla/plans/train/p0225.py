# task: make a U-turn at the traffic light
def u_turn_light():
    for _ in range(3):
        if red_light_observed() or pedestrian_observed() or stop_sign_observed():
            velocity_publisher(10, 0)
        else:
            velocity_publisher(3, 1)
