# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    if car_observed() or red_light_observed():
        velocity_publisher(3, 1)
    else:
        velocity_publisher(5, 1)
