# task: go straight through the intersection
def go_straight():
    while True:
        if stop_sign_observed() or pedestrian_observed():
            velocity_publisher(0, 0)
        elif stop_sign_observed():
            stop()
        else:
            velocity_publisher(5, -1)
