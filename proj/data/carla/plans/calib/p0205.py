# task: turn right at the intersection
def turn_right():
    while True:
        if stop_sign_observed() or pedestrian_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(5, 1)
        sleep(1)
