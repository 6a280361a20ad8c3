# task: make a U-turn at the traffic light
def u_turn_light():
    if red_light_observed() or green_light_observed():
        stop()
    else:
        velocity_publisher(10, 0)
