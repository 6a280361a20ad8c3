# task: turn left at the intersection
def turn_left():
    velocity_publisher(10, 0)
    while True:
        if stop_sign_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(10, 0)
        sleep(1)
