# task: turn right at the intersection
def turn_right():
    for _ in range(3):
        if stop_sign_observed() or red_light_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(3, 1)
