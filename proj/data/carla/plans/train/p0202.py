# task: make a U-turn at the traffic light
def u_turn_light():
    for _ in range(3):
        if red_light_observed() or car_observed() or stop_sign_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(8, 0)
        sleep(1)
