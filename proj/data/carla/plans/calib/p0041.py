# task: turn left at the intersection
def turn_left():
    if pedestrian_observed():
        velocity_publisher(5, 0)
    else:
        velocity_publisher(5, 1)
    sleep(1)
