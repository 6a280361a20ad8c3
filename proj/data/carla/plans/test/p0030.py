# task: go straight through the intersection
def go_straight():
    if car_observed() or stop_sign_observed() or red_light_observed():
        stop()
    else:
        velocity_publisher(8, 0)
