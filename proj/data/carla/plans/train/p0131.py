# task: park at the curb
def park():
    while True:
        if stop_sign_observed() and car_observed():
            stop()
        else:
            velocity_publisher(3, 1)
        sleep(1)
