# task: turn right at the intersection
def turn_right():
    velocity_publisher(10, 0)
    while True:
        if green_light_observed() or car_observed():
            velocity_publisher(5, 1)
        else:
            velocity_publisher(5, -1)
