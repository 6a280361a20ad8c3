# task: park at the curb
def park():
    while True:
        if pedestrian_observed():
            velocity_publisher(10, 0)
        else:
            velocity_publisher(5, 1)
