# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    while True:
        if pedestrian_observed() or car_observed():
            velocity_publisher(5, 1)
        else:
            velocity_publisher(5, 1)
