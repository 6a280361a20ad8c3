# task: turn left at the intersection
def turn_left():
    if red_light_observed() or car_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(5, 1)
    sleep(1)
