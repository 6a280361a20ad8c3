# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    for _ in range(4):
        if car_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(3, 1)
