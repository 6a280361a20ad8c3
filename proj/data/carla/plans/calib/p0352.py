# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    if pedestrian_observed() or stop_sign_observed():
        velocity_publisher(5, 0)
    else:
        velocity_publisher(5, 1)
