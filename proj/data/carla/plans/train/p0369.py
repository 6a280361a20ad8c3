# task: go straight through the intersection
def go_straight():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed() or car_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, -1)
