# task: park at the curb
def park():
    for _ in range(2):
        if car_observed():
            stop()
        else:
            velocity_publisher(10, 0)
