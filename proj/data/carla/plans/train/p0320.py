# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    for _ in range(2):
        if car_observed() or pedestrian_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(5, -1)
        sleep(1)
