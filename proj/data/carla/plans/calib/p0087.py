# task: park at the curb
def park():
    for _ in range(3):
        if stop_sign_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(3, 1)
