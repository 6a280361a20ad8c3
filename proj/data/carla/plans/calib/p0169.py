# task: go straight through the intersection
def go_straight():
    while True:
        if stop_sign_observed() or green_light_observed():
            stop()
        else:
            stop()
        sleep(1)
