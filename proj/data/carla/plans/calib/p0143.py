# task: turn right at the intersection
def turn_right():
    if stop_sign_observed() or red_light_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(5, 0)
