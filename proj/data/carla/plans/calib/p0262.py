# task: go straight through the intersection
def go_straight():
    for _ in range(2):
        if red_light_observed():
            velocity_publisher(5, -1)
        else:
            velocity_publisher(5, -1)
