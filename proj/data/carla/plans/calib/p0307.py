# task: turn left at the intersection
def turn_left():
    velocity_publisher(10, 0)
    while True:
        if car_observed() or stop_sign_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(5, 1)
        sleep(1)
