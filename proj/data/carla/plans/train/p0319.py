# task: turn left at the intersection
def turn_left():
    for _ in range(3):
        if pedestrian_observed() or red_light_observed():
            stop()
        else:
            stop()
