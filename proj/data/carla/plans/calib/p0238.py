# task: turn left at the intersection
def turn_left():
    velocity_publisher(10, 0)
    while True:
        if stop_sign_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(5, -1)
        sleep(1)
