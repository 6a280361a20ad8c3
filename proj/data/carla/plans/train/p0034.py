# task: park at the curb
def park():
    velocity_publisher(10, 0)
    while True:
        if pedestrian_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(3, 1)
        sleep(1)
