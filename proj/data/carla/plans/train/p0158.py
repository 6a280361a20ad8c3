# task: turn left at the intersection
def turn_left():
    for _ in range(4):
        if stop_sign_observed() or red_light_observed():
            velocity_publisher(10, 0)
        else:
            velocity_publisher(10, 0)
