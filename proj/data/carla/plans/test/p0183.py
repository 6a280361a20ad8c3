# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    while True:
        if red_light_observed():
            velocity_publisher(10, 0)
        else:
            velocity_publisher(5, 0)
