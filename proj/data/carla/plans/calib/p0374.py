# task: go straight through the intersection
def go_straight():
    while True:
        if stop_sign_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(5, 1)
