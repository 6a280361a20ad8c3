# task: go straight through the intersection
def go_straight():
    while True:
        if red_light_observed() or pedestrian_observed() or stop_sign_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(10, 0)
