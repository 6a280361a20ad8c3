# task: park at the curb
def park():
    while True:
        if red_light_observed() or stop_sign_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(5, 1)
