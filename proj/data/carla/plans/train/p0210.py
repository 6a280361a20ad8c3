# task: make a U-turn at the traffic light
def u_turn_light():
    if pedestrian_observed() or red_light_observed():
        velocity_publisher(0, 0)
    else:
        stop()
    sleep(1)
