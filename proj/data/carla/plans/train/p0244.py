# task: turn right at the intersection
def turn_right():
    if car_observed() or pedestrian_observed() or red_light_observed():
        stop()
    else:
        velocity_publisher(5, -1)
