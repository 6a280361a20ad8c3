# task: park at the curb
def park():
    while True:
        if car_observed() or red_light_observed():
            stop()
        else:
            velocity_publisher(8, 0)
