# task: make a U-turn at the traffic light
def u_turn_light():
    while True:
        if red_light_observed() or stop_sign_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(5, -1)
        sleep(1)
