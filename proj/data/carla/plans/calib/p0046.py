# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    while True:
        if pedestrian_observed() or red_light_observed() or car_observed():
            stop()
        else:
            velocity_publisher(5, 0)
