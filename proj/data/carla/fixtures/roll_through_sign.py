def stop_sign_intersection():
    while True:
        if stop_sign_observed():
            velocity_publisher(5, 0)  # slow down only
        else:
            velocity_publisher(10, 0)
