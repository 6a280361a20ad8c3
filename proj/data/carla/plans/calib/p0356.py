# task: make a U-turn at the traffic light
def u_turn_light():
    velocity_publisher(10, 0)
    while True:
        if stop_sign_observed() and car_observed():
            velocity_publisher(5, -1)
        elif green_light_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(5, -1)
        sleep(1)
