# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    while True:
        if car_observed() or stop_sign_observed():
            stop()
        else:
            velocity_publisher(3, 1)
