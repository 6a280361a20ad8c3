# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    if pedestrian_observed() or car_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(5, 1)
