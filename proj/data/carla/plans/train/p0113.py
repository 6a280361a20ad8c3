# task: make a U-turn at the traffic light
def u_turn_light():
    if pedestrian_observed() or stop_sign_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(10, 0)
    sleep(1)
