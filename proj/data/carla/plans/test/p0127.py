# task: park at the curb
def park():
    while True:
        if stop_sign_observed():
            stop()
        else:
            velocity_publisher(5, 0)
