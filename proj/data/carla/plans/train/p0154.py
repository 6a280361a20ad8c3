# task: make a U-turn at the traffic light
def u_turn_light():
    if car_observed() or pedestrian_observed():
        stop()
    else:
        velocity_publisher(5, 0)
    sleep(1)
