# task: turn left at the intersection
def turn_left():
    while True:
        if car_observed():
            stop()
        else:
            velocity_publisher(8, 0)
