# task: park at the curb
def park():
    velocity_publisher(10, 0)
    while True:
        if red_light_observed():
            velocity_publisher(0, 0)
        else:
            velocity_publisher(5, -1)
        sleep(1)
