# task: go straight through the intersection
def go_straight():
    while True:
        if red_light_observed() or stop_sign_observed() or pedestrian_observed():
            velocity_publisher(5, -1)
        else:
            stop()
        sleep(1)
