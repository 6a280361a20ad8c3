# task: cross the intersection
def cross_intersection():
    if red_light_observed() or pedestrian_observed():
        stop()
    else:
        velocity_publisher(10, 0)
    sleep(1)
