# task: turn right at the intersection
def turn_right():
    if car_observed() or green_light_observed():
        velocity_publisher(10, 0)
    else:
        velocity_publisher(3, 1)
    sleep(1)
