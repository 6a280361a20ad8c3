while True:
    stop()
