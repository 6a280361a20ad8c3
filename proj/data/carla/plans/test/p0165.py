# task: turn right at the intersection
def turn_right():
    while True:
        if red_light_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 0)
