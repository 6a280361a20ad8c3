# task: park at the curb
def park():
    while True:
        if car_observed() or red_light_observed():
            velocity_publisher(10, 0)
        else:
            velocity_publisher(5, -1)
        sleep(1)
