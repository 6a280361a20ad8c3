# task: turn right at the intersection
def turn_right():
    if car_observed() or pedestrian_observed() or stop_sign_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(5, -1)
    sleep(1)
