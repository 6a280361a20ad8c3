# task: go straight through the intersection
def go_straight():
    for _ in range(4):
        if car_observed() or pedestrian_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(5, 0)
