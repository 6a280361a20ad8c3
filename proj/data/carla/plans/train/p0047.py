# task: go straight through the intersection
def go_straight():
    if pedestrian_observed() or car_observed() or stop_sign_observed():
        stop()
    else:
        velocity_publisher(8, 0)
