# task: turn left at the intersection
def turn_left():
    if red_light_observed() or pedestrian_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(5, 0)
    sleep(1)
