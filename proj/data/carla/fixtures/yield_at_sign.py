def stop_sign_intersection():
    while True:
        if stop_sign_observed() and car_observed():
            stop()
        else:
            velocity_publisher(10, 0)
