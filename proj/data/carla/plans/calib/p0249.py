# task: turn right at the intersection
def turn_right():
    if red_light_observed() or stop_sign_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(8, 0)
