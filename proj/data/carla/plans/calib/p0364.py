# task: park at the curb
def park():
    while True:
        if pedestrian_observed() or car_observed():
            velocity_publisher(5, -1)
        else:
            stop()
