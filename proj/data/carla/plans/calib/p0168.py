# task: park at the curb
def park():
    if pedestrian_observed() or red_light_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(3, 1)
    sleep(1)
