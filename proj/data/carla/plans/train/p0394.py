# task: turn right at the intersection
def turn_right():
    for _ in range(4):
        if red_light_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(10, 0)
