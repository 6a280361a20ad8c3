# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    if stop_sign_observed() or car_observed():
        stop()
    elif pedestrian_observed():
        stop()
    else:
        velocity_publisher(5, 1)
