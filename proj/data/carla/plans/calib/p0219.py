# task: go straight through the intersection
def go_straight():
    if red_light_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(5, -1)
    sleep(1)
