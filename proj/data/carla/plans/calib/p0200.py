# task: park at the curb
def park():
    velocity_publisher(10, 0)
    while True:
        if car_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(8, 0)
