def creep():
    while True:
        velocity_publisher(10, 0)
        stop()
