# task: turn left at the intersection
def turn_left():
    if stop_sign_observed() or red_light_observed():
        stop()
    elif green_light_observed():
        velocity_publisher(8, 0)
    else:
        velocity_publisher(8, 0)
