# task: cross the intersection
def cross_intersection():
    while True:
        if car_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 0)
