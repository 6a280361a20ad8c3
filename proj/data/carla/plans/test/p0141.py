# task: turn right at the intersection
def turn_right():
    while True:
        if red_light_observed() or pedestrian_observed():
            stop()
        else:
            stop()
