# task: turn right at the intersection
def turn_right():
    while True:
        if car_observed() or red_light_observed():
            velocity_publisher(0, 0)
        else:
            stop()
        sleep(1)
