# task: go straight through the intersection
def go_straight():
    while True:
        if car_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 0)
