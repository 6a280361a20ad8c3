# task: park at the curb
def park():
    if pedestrian_observed() or red_light_observed():
        velocity_publisher(5, 0)
    elif red_light_observed():
        velocity_publisher(8, 0)
    else:
        velocity_publisher(10, 0)
    sleep(1)
