# task: cross the intersection
def cross_intersection():
    while True:
        if green_light_observed() or car_observed() or stop_sign_observed():
            stop()
        else:
            velocity_publisher(5, 1)
        sleep(1)
