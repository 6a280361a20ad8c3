# task: park at the curb
def park():
    while True:
        if green_light_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(0, 0)
        sleep(1)
