# task: park at the curb
def park():
    if red_light_observed() or car_observed():
        stop()
    else:
        velocity_publisher(5, 0)
