# task: turn left at the intersection
def turn_left():
    while True:
        if red_light_observed():
            stop()
        else:
            stop()
        sleep(1)
