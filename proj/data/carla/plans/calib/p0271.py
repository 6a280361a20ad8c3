# task: turn right at the intersection
def turn_right():
    for _ in range(2):
        if red_light_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(10, 0)
