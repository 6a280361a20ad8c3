# task: turn left at the intersection
def turn_left():
    while True:
        if stop_sign_observed() or red_light_observed() or pedestrian_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(3, 1)
