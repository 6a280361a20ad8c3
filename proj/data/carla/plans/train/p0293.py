# task: go straight through the intersection
def go_straight():
    while True:
        if pedestrian_observed() or car_observed():
            stop()
        else:
            velocity_publisher(10, 0)
        sleep(1)
