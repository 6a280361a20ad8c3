# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    if car_observed() or red_light_observed():
        stop()
    else:
        velocity_publisher(10, 0)
