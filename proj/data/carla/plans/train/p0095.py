# task: park at the curb
def park():
    if stop_sign_observed() and car_observed():
        velocity_publisher(5, -1)
    else:
        velocity_publisher(10, 0)
