# task: go straight through the intersection
def go_straight():
    if red_light_observed():
        velocity_publisher(10, 0)
    else:
        velocity_publisher(5, 1)
