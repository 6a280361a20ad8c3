# task: park at the curb
def park():
    if red_light_observed() or stop_sign_observed() or pedestrian_observed():
        stop()
    else:
        velocity_publisher(10, 0)
    sleep(1)
