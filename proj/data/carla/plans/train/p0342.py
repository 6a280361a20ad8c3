# task: turn right at the intersection
def turn_right():
    velocity_publisher(10, 0)
    while True:
        if car_observed() or red_light_observed() or green_light_observed():
            stop()
        else:
            velocity_publisher(5, 1)
