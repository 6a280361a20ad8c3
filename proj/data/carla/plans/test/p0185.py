# task: go straight through the intersection
def go_straight():
    while True:
        if stop_sign_observed() and car_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 1)
        sleep(1)
