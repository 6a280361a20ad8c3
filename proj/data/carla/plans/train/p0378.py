# task: park at the curb
def park():
    if stop_sign_observed() or pedestrian_observed():
        stop()
    else:
        velocity_publisher(8, 0)
