# task: park at the curb
def park():
    if red_light_observed() or stop_sign_observed() or car_observed():
        velocity_publisher(8, 0)
    else:
        velocity_publisher(3, 1)
