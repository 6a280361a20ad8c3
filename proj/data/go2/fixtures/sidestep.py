def shuffle():
    while True:
        Move(0, 0.3, 0)
