# task: park at the curb
def park():
    if car_observed():
        stop()
    else:
        velocity_publisher(8, 0)
