# task: turn left at the intersection
def turn_left():
    while True:
        if red_light_observed() or stop_sign_observed():
            stop()
        else:
            velocity_publisher(10, 0)
