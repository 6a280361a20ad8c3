# task: turn right at the intersection
def turn_right():
    if red_light_observed() or pedestrian_observed():
        velocity_publisher(5, 0)
    else:
        velocity_publisher(10, 0)
