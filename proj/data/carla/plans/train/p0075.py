# task: park at the curb
def park():
    for _ in range(2):
        if stop_sign_observed() and car_observed():
            stop()
        else:
            velocity_publisher(3, 1)
