# task: turn right at the intersection
def turn_right():
    while True:
        if red_light_observed() or pedestrian_observed() or stop_sign_observed():
            velocity_publisher(10, 0)
        else:
            velocity_publisher(3, 1)
        sleep(1)
