# task: make a U-turn at the traffic light
def u_turn_light():
    if pedestrian_observed() or red_light_observed():
        stop()
    else:
        velocity_publisher(10, 0)
