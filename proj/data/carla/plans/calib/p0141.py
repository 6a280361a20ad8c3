# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    velocity_publisher(10, 0)
    while True:
        if car_observed() or pedestrian_observed():
            velocity_publisher(3, 1)
        else:
            velocity_publisher(10, 0)
