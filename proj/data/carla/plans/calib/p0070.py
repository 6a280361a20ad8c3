# task: park at the curb
def park():
    while True:
        if stop_sign_observed() or car_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 0)
