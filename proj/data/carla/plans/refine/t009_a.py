# task: turn left at the intersection
def turn_left():
    while True:
        if red_light_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(8, 0)
