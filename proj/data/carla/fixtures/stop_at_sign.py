def approach_sign():
    while True:
        if stop_sign_observed():
            stop()
        else:
            velocity_publisher(10, 0)
