# task: go straight through the intersection
def go_straight():
    velocity_publisher(10, 0)
    while True:
        if pedestrian_observed() or stop_sign_observed():
            velocity_publisher(10, 0)
        else:
            velocity_publisher(8, 0)
