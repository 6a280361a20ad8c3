# task: park at the curb
def park():
    for _ in range(2):
        if pedestrian_observed() or car_observed() or red_light_observed():
            velocity_publisher(5, 1)
        else:
            velocity_publisher(5, 0)
