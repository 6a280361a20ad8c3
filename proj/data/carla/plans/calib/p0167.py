# task: go straight through the intersection
def go_straight():
    if car_observed():
        stop()
    else:
        velocity_publisher(10, 0)
