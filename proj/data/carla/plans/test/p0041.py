# task: go straight through the intersection
def go_straight():
    while True:
        if red_light_observed():
            stop()
        else:
            velocity_publisher(5, 1)
