def traffic_light():
    if red_light_observed():
        stop()
    else:
        velocity_publisher(10, 0)
