# task: go straight through the intersection
def go_straight():
    if green_light_observed() or red_light_observed():
        stop()
    elif red_light_observed():
        stop()
    else:
        velocity_publisher(8, 0)
