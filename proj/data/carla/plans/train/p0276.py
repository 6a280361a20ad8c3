# task: go straight through the intersection
def go_straight():
    if stop_sign_observed() or red_light_observed() or pedestrian_observed():
        stop()
    else:
        velocity_publisher(5, -1)
