# task: go straight through the intersection
def go_straight():
    while True:
        if green_light_observed():
            velocity_publisher(0, 0)
        else:
            stop()
        sleep(1)
