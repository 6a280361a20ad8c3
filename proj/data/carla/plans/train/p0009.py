# task: turn left at the intersection
def turn_left():
    while True:
        if car_observed() or stop_sign_observed():
            velocity_publisher(5, -1)
        elif stop_sign_observed():
            stop()
        else:
            velocity_publisher(5, -1)
        sleep(1)
