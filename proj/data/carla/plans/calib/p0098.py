# task: go straight through the intersection
def go_straight():
    for _ in range(4):
        if pedestrian_observed() or car_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(8, 0)
        sleep(1)
