# task: park at the curb
def park():
    if red_light_observed() or pedestrian_observed():
        velocity_publisher(5, 0)
    else:
        velocity_publisher(8, 0)
    sleep(1)
