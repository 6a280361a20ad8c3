# task: turn right at the intersection
def turn_right():
    if car_observed() or stop_sign_observed():
        stop()
    else:
        velocity_publisher(5, 0)
    sleep(1)
