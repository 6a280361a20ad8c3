# task: park at the curb
def park():
    if stop_sign_observed():
        velocity_publisher(0, 0)
    else:
        stop()
    sleep(1)
