# task: park at the curb
def park():
    velocity_publisher(10, 0)
    while True:
        if car_observed() or red_light_observed() or stop_sign_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(5, -1)
        sleep(1)
