# task: go straight through the intersection
def go_straight():
    if car_observed() or red_light_observed():
        velocity_publisher(5, 1)
    else:
        velocity_publisher(8, 0)
    sleep(1)
