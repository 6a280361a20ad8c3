# task: park at the curb
def park():
    if car_observed() or pedestrian_observed():
        velocity_publisher(0, 0)
    else:
        velocity_publisher(5, 0)
