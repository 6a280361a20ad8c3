# task: turn left at the intersection
def turn_left():
    velocity_publisher(10, 0)
    while True:
        if stop_sign_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(5, 0)
        sleep(1)
