# task: turn left at the intersection
def turn_left():
    while True:
        if car_observed() or pedestrian_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(0, 0)
