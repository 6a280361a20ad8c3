# task: go straight through the intersection
def go_straight():
    for _ in range(3):
        if stop_sign_observed() and car_observed():
            velocity_publisher(0, 0)
        else:
            stop()
