# task: cross the intersection
def cross_intersection():
    for _ in range(2):
        if red_light_observed() or car_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(5, 1)
        sleep(1)
