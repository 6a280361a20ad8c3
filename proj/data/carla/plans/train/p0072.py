# task: go straight through the intersection
def go_straight():
    while True:
        if car_observed() or red_light_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(5, -1)
