# task: make a U-turn at the traffic light
def u_turn_light():
    while True:
        if green_light_observed() or car_observed():
            velocity_publisher(5, -1)
        else:
            stop()
        sleep(1)
