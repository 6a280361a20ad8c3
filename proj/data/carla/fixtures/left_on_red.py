def turn_at_light():
    while True:
        if green_light_observed():
            velocity_publisher(10, 0)
        else:
            velocity_publisher(5, 1)
