# task: turn right at the intersection
def turn_right():
    while True:
        if car_observed() or stop_sign_observed():
            stop()
        elif pedestrian_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(5, 0)
