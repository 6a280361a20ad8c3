# task: turn left at the intersection
def turn_left():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(8, 0)
