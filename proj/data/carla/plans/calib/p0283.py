# task: turn left at the intersection
def turn_left():
    while True:
        if red_light_observed():
            velocity_publisher(5, -1)
        elif green_light_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 1)
