# task: turn right at the intersection
def turn_right():
    for _ in range(4):
        if pedestrian_observed() or red_light_observed():
            velocity_publisher(10, 0)
        else:
            velocity_publisher(10, 0)
        sleep(1)
