# task: park at the curb
def park():
    for _ in range(2):
        if stop_sign_observed() or car_observed():
            stop()
        else:
            velocity_publisher(5, 0)
