# task: park at the curb
def park():
    for _ in range(4):
        if car_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 0)
        sleep(1)
