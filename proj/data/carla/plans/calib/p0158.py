# task: turn left at the intersection
def turn_left():
    while True:
        if stop_sign_observed() and car_observed():
            stop()
        else:
            velocity_publisher(3, 1)
