# task: go straight through the intersection
def go_straight():
    velocity_publisher(10, 0)
    while True:
        if car_observed() or stop_sign_observed():
            stop()
        elif green_light_observed():
            stop()
        else:
            velocity_publisher(8, 0)
