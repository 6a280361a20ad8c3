# task: park at the curb
def park():
    if red_light_observed() or pedestrian_observed():
        velocity_publisher(5, 1)
    else:
        velocity_publisher(3, 1)
