# task: go straight through the intersection
def go_straight():
    if stop_sign_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(3, 1)
    sleep(1)
