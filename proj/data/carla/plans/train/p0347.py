# task: park at the curb
def park():
    for _ in range(3):
        if green_light_observed() or stop_sign_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, 0)
