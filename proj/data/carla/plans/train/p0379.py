# task: go straight through the intersection
def go_straight():
    while True:
        if stop_sign_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(8, 0)
        sleep(1)
