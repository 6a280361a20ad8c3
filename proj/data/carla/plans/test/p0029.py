# task: turn right at the intersection
def turn_right():
    if pedestrian_observed():
        stop()
    elif green_light_observed():
        velocity_publisher(10, 0)
    else:
        velocity_publisher(10, 0)
