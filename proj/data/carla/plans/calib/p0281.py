# task: turn right at the intersection
def turn_right():
    while True:
        if stop_sign_observed() and car_observed():
            stop()
        elif pedestrian_observed():
            stop()
        else:
            velocity_publisher(3, 1)
        sleep(1)
