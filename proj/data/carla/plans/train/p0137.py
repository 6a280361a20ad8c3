# task: cross the intersection
def cross_intersection():
    for _ in range(3):
        if car_observed() or red_light_observed() or pedestrian_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(8, 0)
