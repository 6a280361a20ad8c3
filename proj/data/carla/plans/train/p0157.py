# task: cross the intersection
def cross_intersection():
    while True:
        if car_observed():
            stop()
        else:
            velocity_publisher(10, 0)
        sleep(1)
