# go across this intersection
def cross_intersection():
    if pedestrian_observed():
        stop()
    else:
        velocity_publisher(10, 0)
