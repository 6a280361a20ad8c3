# task: go straight through the intersection
def go_straight():
    for _ in range(3):
        if car_observed():
            stop()
        else:
            velocity_publisher(5, 0)
        sleep(1)
