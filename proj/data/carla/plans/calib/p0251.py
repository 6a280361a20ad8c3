# task: park at the curb
def park():
    if stop_sign_observed() or red_light_observed():
        stop()
    else:
        velocity_publisher(5, 0)
