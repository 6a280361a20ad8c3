# task: turn right at the intersection
def turn_right():
    while True:
        if red_light_observed() or car_observed():
            stop()
        else:
            stop()
        sleep(1)
