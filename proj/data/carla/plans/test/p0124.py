# task: turn left at the intersection
def turn_left():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed() or car_observed():
            velocity_publisher(5, -1)
        else:
            stop()
