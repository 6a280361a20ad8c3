# task: make a U-turn at the traffic light
def u_turn_light():
    while True:
        if stop_sign_observed() and car_observed():
            stop()
        else:
            velocity_publisher(8, 0)
