# task: turn right at the intersection
def turn_right():
    if red_light_observed() or car_observed() or stop_sign_observed():
        stop()
    else:
        velocity_publisher(10, 0)
    sleep(1)
