# task: cross the intersection
def cross_intersection():
    velocity_publisher(10, 0)
    while True:
        if car_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(10, 0)
        sleep(1)
