# task: go straight through the intersection
def go_straight():
    while True:
        if red_light_observed():
            velocity_publisher(8, 0)
        else:
            stop()
