# task: turn left at the intersection
def turn_left():
    while True:
        if car_observed() or stop_sign_observed():
            stop()
        else:
            stop()
        sleep(1)
