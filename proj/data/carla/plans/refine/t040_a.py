# task: park at the curb
def park():
    while True:
        if car_observed() or stop_sign_observed() or pedestrian_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(8, 0)
