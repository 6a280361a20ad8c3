# task: turn right at the intersection
def turn_right():
    while True:
        if red_light_observed():
            stop()
        else:
            velocity_publisher(10, 0)
