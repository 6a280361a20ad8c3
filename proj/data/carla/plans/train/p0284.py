# task: turn left at the intersection
def turn_left():
    if car_observed():
        velocity_publisher(8, 0)
    else:
        velocity_publisher(8, 0)
