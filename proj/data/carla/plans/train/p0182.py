# task: park at the curb
def park():
    while True:
        if red_light_observed():
            velocity_publisher(5, 0)
        else:
            velocity_publisher(8, 0)
