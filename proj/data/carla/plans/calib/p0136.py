# task: park at the curb
def park():
    if stop_sign_observed() or car_observed():
        velocity_publisher(5, -1)
    else:
        stop()
    sleep(1)
