# task: turn left at the intersection
def turn_left():
    if stop_sign_observed():
        velocity_publisher(5, -1)
    elif car_observed():
        stop()
    else:
        velocity_publisher(5, -1)
    sleep(1)
