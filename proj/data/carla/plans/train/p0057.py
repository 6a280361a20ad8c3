# task: go straight through the intersection
def go_straight():
    velocity_publisher(10, 0)
    while True:
        if pedestrian_observed():
            stop()
        else:
            velocity_publisher(3, 1)
