# task: turn right at the intersection
def turn_right():
    while True:
        if stop_sign_observed() or red_light_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(5, 0)
        sleep(1)
