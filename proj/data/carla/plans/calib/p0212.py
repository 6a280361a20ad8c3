# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    if red_light_observed():
        velocity_publisher(8, 0)
    else:
        velocity_publisher(8, 0)
