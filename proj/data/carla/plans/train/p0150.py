# task: turn left at the intersection
def turn_left():
    if stop_sign_observed() and car_observed():
        stop()
    else:
        velocity_publisher(5, -1)
