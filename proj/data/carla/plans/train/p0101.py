# task: go straight through the intersection
def go_straight():
    if pedestrian_observed() or car_observed():
        stop()
    else:
        velocity_publisher(5, 0)
    sleep(1)
