# task: make a U-turn at the traffic light
def u_turn_light():
    while True:
        if stop_sign_observed() or car_observed():
            stop()
        elif car_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(5, -1)
