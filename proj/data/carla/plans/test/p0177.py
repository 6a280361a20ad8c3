# task: park at the curb
def park():
    while True:
        if stop_sign_observed() or car_observed():
            stop()
        else:
            velocity_publisher(10, 0)
        sleep(1)
