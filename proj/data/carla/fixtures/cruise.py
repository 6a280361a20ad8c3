def cruise():
    while True:
        velocity_publisher(10, 0)
