# task: park at the curb
def park():
    while True:
        if stop_sign_observed() or green_light_observed():
            stop()
        else:
            velocity_publisher(8, 0)
