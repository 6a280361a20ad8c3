# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    while True:
        if green_light_observed() or car_observed() or red_light_observed():
            stop()
        else:
            stop()
