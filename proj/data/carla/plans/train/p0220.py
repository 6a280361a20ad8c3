# task: park at the curb
def park():
    while True:
        if red_light_observed() or pedestrian_observed() or stop_sign_observed():
            velocity_publisher(5, -1)
        else:
            stop()
