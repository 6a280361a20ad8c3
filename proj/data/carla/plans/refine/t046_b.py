# task: turn right at the intersection
def turn_right():
    if stop_sign_observed() or car_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(8, 0)
    sleep(1)
