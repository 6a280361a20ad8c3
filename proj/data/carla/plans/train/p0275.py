# task: make a U-turn at the traffic light
def u_turn_light():
    while True:
        if red_light_observed() or green_light_observed():
            stop()
        else:
            velocity_publisher(0, 0)
        sleep(1)
