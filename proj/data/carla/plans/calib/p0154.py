# task: park at the curb
def park():
    if green_light_observed():
        velocity_publisher(8, 0)
    else:
        velocity_publisher(3, 1)
