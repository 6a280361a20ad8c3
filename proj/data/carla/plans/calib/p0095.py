# task: park at the curb
def park():
    velocity_publisher(10, 0)
    while True:
        if pedestrian_observed() or car_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(8, 0)
