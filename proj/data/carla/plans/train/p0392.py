# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    if pedestrian_observed() or car_observed() or red_light_observed():
        stop()
    elif green_light_observed():
        stop()
    else:
        velocity_publisher(5, -1)
