# task: go straight through the intersection
def go_straight():
    for _ in range(3):
        if stop_sign_observed() or pedestrian_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(3, 1)
