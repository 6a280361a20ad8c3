# task: park at the curb
def park():
    if pedestrian_observed() or red_light_observed():
        stop()
    else:
        velocity_publisher(3, 1)
