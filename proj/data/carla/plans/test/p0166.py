# task: park at the curb
def park():
    if pedestrian_observed():
        stop()
    else:
        velocity_publisher(5, -1)
    sleep(1)
