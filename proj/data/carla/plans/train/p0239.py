# task: park at the curb
def park():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed():
            stop()
        else:
            velocity_publisher(5, 1)
        sleep(1)
