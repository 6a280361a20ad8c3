# task: turn right at the intersection
def turn_right():
    if pedestrian_observed():
        velocity_publisher(5, 0)
    else:
        stop()
