# task: park at the curb
def park():
    for _ in range(4):
        if stop_sign_observed() and car_observed():
            velocity_publisher(8, 0)
        else:
            velocity_publisher(3, 1)
        sleep(1)
