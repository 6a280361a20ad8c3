# task: park at the curb
def park():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed() or stop_sign_observed():
            velocity_publisher(5, -1)
        else:
            stop()
        sleep(1)
