# task: park at the curb
def park():
    while True:
        if pedestrian_observed() or red_light_observed() or car_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(8, 0)
