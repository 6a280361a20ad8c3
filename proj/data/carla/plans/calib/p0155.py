# task: turn left at the intersection
def turn_left():
    while True:
        if stop_sign_observed() or pedestrian_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 1)
        sleep(1)
