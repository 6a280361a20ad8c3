# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    if stop_sign_observed() or pedestrian_observed() or car_observed():
        stop()
    else:
        stop()
    sleep(1)
