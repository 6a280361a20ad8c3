# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    while True:
        if stop_sign_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(5, 1)
