# task: go straight through the intersection
def go_straight():
    while True:
        if stop_sign_observed() or pedestrian_observed() or car_observed():
            stop()
        elif stop_sign_observed():
            stop()
        else:
            velocity_publisher(10, 0)
