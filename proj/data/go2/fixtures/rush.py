while True:
    Move(0.5, 0, 0)
