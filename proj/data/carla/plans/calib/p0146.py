# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    while True:
        if pedestrian_observed() or red_light_observed() or car_observed():
            velocity_publisher(8, 0)
        else:
            stop()
