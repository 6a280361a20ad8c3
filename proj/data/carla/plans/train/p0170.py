# task: turn left at the intersection
def turn_left():
    if stop_sign_observed() or car_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(0, 0)
