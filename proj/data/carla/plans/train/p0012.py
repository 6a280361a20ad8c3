# task: park at the curb
def park():
    while True:
        if red_light_observed():
            velocity_publisher(0, 0)
        elif stop_sign_observed():
            stop()
        else:
            velocity_publisher(10, 0)
