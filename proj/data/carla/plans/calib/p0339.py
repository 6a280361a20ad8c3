# task: make a U-turn at the traffic light
def u_turn_light():
    for _ in range(4):
        if pedestrian_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(5, 1)
