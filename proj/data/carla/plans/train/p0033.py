# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    for _ in range(2):
        if stop_sign_observed() or red_light_observed() or car_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(3, 1)
