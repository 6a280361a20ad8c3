# task: turn right at the intersection
def turn_right():
    if stop_sign_observed() or pedestrian_observed():
        stop()
    else:
        velocity_publisher(3, 1)
    sleep(1)
