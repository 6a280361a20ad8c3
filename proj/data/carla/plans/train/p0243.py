# task: cross the intersection
def cross_intersection():
    while True:
        if car_observed() or red_light_observed():
            velocity_publisher(3, 1)
        else:
            stop()
        sleep(1)
