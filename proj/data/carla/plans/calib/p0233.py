# task: turn left at the intersection
def turn_left():
    if red_light_observed() or car_observed():
        stop()
    else:
        velocity_publisher(5, -1)
