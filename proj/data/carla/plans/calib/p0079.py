# task: make a U-turn at the traffic light
def u_turn_light():
    if stop_sign_observed() or car_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(5, 1)
    sleep(1)
