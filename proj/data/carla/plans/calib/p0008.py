# task: park at the curb
def park():
    velocity_publisher(10, 0)
    while True:
        if stop_sign_observed() and car_observed():
            stop()
        else:
            velocity_publisher(0, 0)
        sleep(1)
