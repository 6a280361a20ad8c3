# task: turn right at the intersection
def turn_right():
    if car_observed():
        velocity_publisher(5, -1)
    else:
        stop()
