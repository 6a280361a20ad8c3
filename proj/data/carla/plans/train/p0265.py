# task: go straight through the intersection
def go_straight():
    if car_observed() or pedestrian_observed():
        velocity_publisher(5, 0)
    else:
        velocity_publisher(5, 0)
