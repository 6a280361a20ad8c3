# task: turn right at the intersection
def turn_right():
    if stop_sign_observed() or car_observed():
        stop()
    else:
        velocity_publisher(5, 1)
