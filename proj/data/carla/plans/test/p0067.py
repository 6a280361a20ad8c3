# task: go straight through the intersection
def go_straight():
    if green_light_observed() or stop_sign_observed():
        stop()
    else:
        velocity_publisher(5, -1)
