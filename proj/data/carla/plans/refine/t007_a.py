# task: park at the curb
def park():
    if stop_sign_observed() or car_observed():
        stop()
    else:
        velocity_publisher(8, 0)
    sleep(1)
