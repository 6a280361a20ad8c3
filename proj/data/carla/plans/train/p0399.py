# task: go straight through the intersection
def go_straight():
    if red_light_observed() or car_observed():
        velocity_publisher(8, 0)
    else:
        velocity_publisher(5, -1)
