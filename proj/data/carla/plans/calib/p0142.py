# task: park at the curb
def park():
    velocity_publisher(10, 0)
    while True:
        if pedestrian_observed() or green_light_observed():
            velocity_publisher(10, 0)
        else:
            stop()
        sleep(1)
