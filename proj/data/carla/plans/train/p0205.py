# task: go straight through the intersection
def go_straight():
    if red_light_observed() or car_observed():
        stop()
    else:
        velocity_publisher(5, -1)
