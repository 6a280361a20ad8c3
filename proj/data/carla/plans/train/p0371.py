# task: park at the curb
def park():
    for _ in range(4):
        if red_light_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(5, 1)
