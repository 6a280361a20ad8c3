# task: turn right at the intersection
def turn_right():
    if pedestrian_observed() or red_light_observed():
        velocity_publisher(5, 0)
    else:
        velocity_publisher(8, 0)
    sleep(1)
