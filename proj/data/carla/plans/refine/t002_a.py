# task: park at the curb
def park():
    while True:
        if red_light_observed() or pedestrian_observed() or stop_sign_observed():
            stop()
        else:
            velocity_publisher(8, 0)
        sleep(1)
