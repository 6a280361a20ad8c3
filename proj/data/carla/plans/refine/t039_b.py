# task: park at the curb
def park():
    if pedestrian_observed() or car_observed():
        stop()
    else:
        velocity_publisher(5, 0)
