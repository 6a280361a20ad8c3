# task: go straight through the intersection
def go_straight():
    velocity_publisher(10, 0)
    while True:
        if car_observed() or pedestrian_observed():
            stop()
        else:
            stop()
