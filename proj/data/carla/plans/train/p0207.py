# task: turn right at the intersection
def turn_right():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed():
            velocity_publisher(10, 0)
        else:
            velocity_publisher(5, 0)
