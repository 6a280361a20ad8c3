# task: park at the curb
def park():
    if pedestrian_observed() or stop_sign_observed():
        stop()
    else:
        velocity_publisher(3, 1)
    sleep(1)
