# task: go straight through the intersection
def go_straight():
    while True:
        if pedestrian_observed() or stop_sign_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(3, 1)
        sleep(1)
