# task: turn left at the intersection
def turn_left():
    while True:
        if car_observed() or red_light_observed():
            velocity_publisher(3, 1)
        else:
            velocity_publisher(5, 0)
