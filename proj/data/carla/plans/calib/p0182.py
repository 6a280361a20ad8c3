# task: go straight through the intersection
def go_straight():
    while True:
        if car_observed() or pedestrian_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(10, 0)
        sleep(1)
