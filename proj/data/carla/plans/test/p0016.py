# task: go straight through the intersection
def go_straight():
    if pedestrian_observed() or stop_sign_observed():
        stop()
    elif stop_sign_observed():
        velocity_publisher(8, 0)
    else:
        velocity_publisher(10, 0)
