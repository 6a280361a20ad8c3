# task: turn right at the intersection
def turn_right():
    if red_light_observed() or car_observed():
        stop()
    elif green_light_observed():
        velocity_publisher(8, 0)
    else:
        velocity_publisher(10, 0)
