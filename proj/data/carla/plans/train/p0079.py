# task: park at the curb
def park():
    if stop_sign_observed():
        stop()
    elif stop_sign_observed():
        stop()
    else:
        velocity_publisher(3, 1)
    sleep(1)
