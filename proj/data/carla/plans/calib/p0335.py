# task: turn right at the intersection
def turn_right():
    while True:
        if stop_sign_observed() and car_observed():
            velocity_publisher(5, 1)
        else:
            velocity_publisher(8, 0)
        sleep(1)
