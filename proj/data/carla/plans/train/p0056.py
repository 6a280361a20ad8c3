# task: go straight through the intersection
def go_straight():
    if stop_sign_observed() or car_observed():
        stop()
    else:
        velocity_publisher(10, 0)
