# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    for _ in range(4):
        if stop_sign_observed() or car_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(5, 1)
