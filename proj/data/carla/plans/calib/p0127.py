# task: go straight through the intersection
def go_straight():
    velocity_publisher(10, 0)
    while True:
        if stop_sign_observed() and car_observed():
            stop()
        else:
            velocity_publisher(10, 0)
        sleep(1)
