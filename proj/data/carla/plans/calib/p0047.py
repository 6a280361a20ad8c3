# task: turn right at the intersection
def turn_right():
    if pedestrian_observed():
        stop()
    else:
        velocity_publisher(8, 0)
