# task: turn right at the intersection
def turn_right():
    for _ in range(3):
        if pedestrian_observed():
            stop()
        else:
            velocity_publisher(8, 0)
