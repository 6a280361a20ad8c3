# task: park at the curb
def park():
    if car_observed():
        velocity_publisher(3, 1)
    elif green_light_observed():
        velocity_publisher(10, 0)
    else:
        velocity_publisher(8, 0)
