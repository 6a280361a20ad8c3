# task: go straight through the intersection
def go_straight():
    while True:
        if stop_sign_observed() and car_observed():
            stop()
        else:
            stop()
        sleep(1)
