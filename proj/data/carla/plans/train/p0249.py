# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    velocity_publisher(10, 0)
    while True:
        if stop_sign_observed() and car_observed():
            stop()
        else:
            velocity_publisher(3, 1)
        sleep(1)
