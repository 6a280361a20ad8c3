# task: go straight through the intersection
def go_straight():
    for _ in range(4):
        if stop_sign_observed() or red_light_observed() or car_observed():
            stop()
        elif car_observed():
            velocity_publisher(10, 0)
        else:
            velocity_publisher(5, -1)
        sleep(1)
