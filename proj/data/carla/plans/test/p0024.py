# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    while True:
        if car_observed() or red_light_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(5, 0)
