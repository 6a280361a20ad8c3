# task: park at the curb
def park():
    while True:
        if car_observed():
            velocity_publisher(3, 1)
        else:
            velocity_publisher(3, 1)
        sleep(1)
