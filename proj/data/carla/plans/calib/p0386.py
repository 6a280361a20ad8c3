# task: make a U-turn at the traffic light
def u_turn_light():
    if red_light_observed():
        stop()
    else:
        velocity_publisher(8, 0)
