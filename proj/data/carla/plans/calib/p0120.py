# task: park at the curb
def park():
    while True:
        if pedestrian_observed() or stop_sign_observed():
            stop()
        else:
            velocity_publisher(5, -1)
