# task: go straight through the intersection
def go_straight():
    if stop_sign_observed() or pedestrian_observed() or car_observed():
        stop()
    elif green_light_observed():
        velocity_publisher(5, 0)
    else:
        velocity_publisher(5, 0)
    sleep(1)
