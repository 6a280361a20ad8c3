# task: park at the curb
def park():
    while True:
        if stop_sign_observed() or pedestrian_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(8, 0)
