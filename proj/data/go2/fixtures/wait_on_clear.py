def cautious():
    while True:
        if obstacle_detected():
            Move(0, -0.3, 0)
        else:
            Move(0, 0, 0)
