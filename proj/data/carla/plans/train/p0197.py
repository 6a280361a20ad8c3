# task: go straight through the intersection
def go_straight():
    if pedestrian_observed():
        stop()
    else:
        velocity_publisher(5, -1)
    sleep(1)
