# task: park at the curb
def park():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed() or pedestrian_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(8, 0)
        sleep(1)
