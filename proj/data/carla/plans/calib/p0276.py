# task: make a U-turn at the stop sign intersection
def u_turn_sign():
    if red_light_observed() or pedestrian_observed() or stop_sign_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(3, 1)
    sleep(1)
