# task: turn left at the intersection
def turn_left():
    while True:
        if car_observed() or green_light_observed():
            stop()
        else:
            velocity_publisher(0, 0)
