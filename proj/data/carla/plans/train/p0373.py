# task: go straight through the intersection
def go_straight():
    for _ in range(3):
        if red_light_observed() or stop_sign_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, -1)
