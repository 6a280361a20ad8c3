# task: park at the curb
def park():
    while True:
        if car_observed() or green_light_observed():
            velocity_publisher(8, 0)
        else:
            stop()
        sleep(1)
