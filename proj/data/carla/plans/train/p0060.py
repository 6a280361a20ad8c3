# task: go straight through the intersection
def go_straight():
    if red_light_observed() or pedestrian_observed() or stop_sign_observed():
        velocity_publisher(10, 0)
    else:
        stop()
