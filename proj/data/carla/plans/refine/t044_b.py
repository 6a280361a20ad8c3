# task: turn left at the intersection
def turn_left():
    while True:
        if car_observed():
            stop()
        elif car_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(8, 0)
