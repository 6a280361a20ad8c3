# task: turn right at the intersection
def turn_right():
    if car_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(5, 0)
