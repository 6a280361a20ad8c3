# task: turn left at the intersection
def turn_left():
    if pedestrian_observed():
        stop()
    else:
        velocity_publisher(10, 0)
