# task: park at the curb
def park():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed() or car_observed() or pedestrian_observed():
            stop()
        else:
            velocity_publisher(5, 0)
        sleep(1)
