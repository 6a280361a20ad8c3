# task: go straight through the intersection
def go_straight():
    while True:
        if pedestrian_observed() or car_observed():
            stop()
        else:
            stop()
        sleep(1)
