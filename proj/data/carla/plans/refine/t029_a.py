# task: go straight through the intersection
def go_straight():
    if stop_sign_observed() or red_light_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(8, 0)
    sleep(1)
