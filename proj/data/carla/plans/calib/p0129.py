# task: make a U-turn at the traffic light
def u_turn_light():
    while True:
        if pedestrian_observed() or stop_sign_observed():
            stop()
        else:
            stop()
