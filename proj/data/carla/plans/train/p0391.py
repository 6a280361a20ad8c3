# task: go straight through the intersection
def go_straight():
    for _ in range(4):
        if stop_sign_observed():
            stop()
        else:
            stop()
        sleep(1)
