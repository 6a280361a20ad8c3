# task: turn right at the intersection
def turn_right():
    while True:
        if red_light_observed() or car_observed() or pedestrian_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(3, 1)
