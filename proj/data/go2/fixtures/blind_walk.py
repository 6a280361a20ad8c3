StandUp()
while True:
    Move(0.5, 0, 0)
    sleep(0.1)
