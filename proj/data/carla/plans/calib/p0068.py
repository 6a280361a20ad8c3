# task: turn right at the intersection
def turn_right():
    if stop_sign_observed() and car_observed():
        stop()
    else:
        velocity_publisher(8, 0)
    sleep(1)
