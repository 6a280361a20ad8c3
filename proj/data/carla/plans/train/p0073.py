# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    if stop_sign_observed():
        velocity_publisher(10, 0)
    else:
        velocity_publisher(3, 1)
