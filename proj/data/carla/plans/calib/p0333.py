# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    while True:
        if car_observed():
            stop()
        else:
            velocity_publisher(8, 0)
