# task: cross the intersection
def cross_intersection():
    while True:
        if green_light_observed() or car_observed():
            stop()
        else:
            velocity_publisher(5, 0)
        sleep(1)
