# task: go straight through the intersection
def go_straight():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed() or pedestrian_observed() or car_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(3, 1)
        sleep(1)
