# task: turn right at the intersection
def turn_right():
    if stop_sign_observed() or pedestrian_observed():
        velocity_publisher(0, 0)
    else:
        stop()
    sleep(1)
