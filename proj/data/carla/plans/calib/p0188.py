# task: turn right at the intersection
def turn_right():
    velocity_publisher(10, 0)
    while True:
        if pedestrian_observed() or stop_sign_observed():
            stop()
        else:
            velocity_publisher(5, 0)
