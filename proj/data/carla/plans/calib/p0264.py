# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    for _ in range(4):
        if red_light_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(8, 0)
        sleep(1)
