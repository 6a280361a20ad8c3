# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    if stop_sign_observed() or red_light_observed() or pedestrian_observed():
        velocity_publisher(3, 1)
    else:
        velocity_publisher(5, 1)
