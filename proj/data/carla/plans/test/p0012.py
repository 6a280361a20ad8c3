# task: turn left at the intersection
def turn_left():
    if car_observed() or red_light_observed() or green_light_observed():
        velocity_publisher(5, 1)
    else:
        velocity_publisher(5, 0)
    sleep(1)
