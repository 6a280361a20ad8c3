# task: go straight through the intersection
def go_straight():
    if red_light_observed() or stop_sign_observed() or pedestrian_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(5, -1)
    sleep(1)
