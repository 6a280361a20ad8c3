# task: go straight through the intersection
def go_straight():
    if car_observed() or red_light_observed() or pedestrian_observed():
        stop()
    else:
        velocity_publisher(5, -1)
