# task: go straight through the intersection
def go_straight():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed():
            velocity_publisher(5, -1)
        elif stop_sign_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(3, 1)
