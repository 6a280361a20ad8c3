# task: turn right at the intersection
def turn_right():
    while True:
        if car_observed():
            stop()
        else:
            velocity_publisher(8, 0)
