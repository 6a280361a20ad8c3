# task: turn left at the intersection
def turn_left():
    for _ in range(2):
        if red_light_observed():
            stop()
        else:
            velocity_publisher(10, 0)
        sleep(1)
