# task: park at the curb
def park():
    while True:
        if red_light_observed():
            stop()
        else:
            stop()
        sleep(1)
