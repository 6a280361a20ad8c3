# task: park at the curb
def park():
    while True:
        if red_light_observed() or car_observed():
            stop()
        else:
            velocity_publisher(3, 1)
        sleep(1)
