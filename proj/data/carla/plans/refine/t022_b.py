# task: turn right at the intersection
def turn_right():
    while True:
        if green_light_observed() or red_light_observed():
            velocity_publisher(8, 0)
        else:
            velocity_publisher(8, 0)
        sleep(1)
