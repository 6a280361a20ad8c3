# task: turn right at the intersection
def turn_right():
    if red_light_observed():
        stop()
    elif stop_sign_observed():
        stop()
    else:
        velocity_publisher(3, 1)
