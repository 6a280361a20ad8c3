# task: park at the curb
def park():
    while True:
        if pedestrian_observed():
            stop()
        else:
            stop()
