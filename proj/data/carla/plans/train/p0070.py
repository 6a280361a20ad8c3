# task: make a U-turn at the traffic light
def u_turn_light():
    for _ in range(3):
        if stop_sign_observed() and car_observed():
            velocity_publisher(3, 1)
        else:
            velocity_publisher(5, -1)
