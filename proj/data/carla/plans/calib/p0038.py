# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    for _ in range(3):
        if stop_sign_observed() or pedestrian_observed() or car_observed():
            stop()
        else:
            velocity_publisher(10, 0)
        sleep(1)
