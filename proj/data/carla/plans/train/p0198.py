# task: cross the intersection
def cross_intersection():
    while True:
        if red_light_observed() or car_observed():
            stop()
        else:
            velocity_publisher(5, 1)
        sleep(1)
