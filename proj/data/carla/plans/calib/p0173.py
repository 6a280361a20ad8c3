# task: turn right at the intersection
def turn_right():
    if car_observed() or pedestrian_observed() or red_light_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(3, 1)
