# task: turn left at the intersection
def turn_left():
    while True:
        if stop_sign_observed() or pedestrian_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(3, 1)
        sleep(1)
