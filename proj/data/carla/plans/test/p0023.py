# task: make a U-turn at the traffic light
def u_turn_light():
    if stop_sign_observed() and car_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(0, 0)
    sleep(1)
