# task: park at the curb
def park():
    if red_light_observed() or stop_sign_observed() or pedestrian_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(5, 0)
