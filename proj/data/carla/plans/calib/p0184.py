# task: turn left at the intersection
def turn_left():
    velocity_publisher(10, 0)
    while True:
        if stop_sign_observed() or car_observed():
            velocity_publisher(8, 0)
        else:
            velocity_publisher(8, 0)
