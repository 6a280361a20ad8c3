# task: turn right at the intersection
def turn_right():
    if red_light_observed() or pedestrian_observed():
        stop()
    else:
        velocity_publisher(5, 1)
    sleep(1)
