# task: park at the curb
def park():
    while True:
        if red_light_observed() or pedestrian_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(5, 1)
        sleep(1)
