# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    if pedestrian_observed() or stop_sign_observed() or car_observed():
        velocity_publisher(5, 0)
    else:
        velocity_publisher(8, 0)
    sleep(1)
