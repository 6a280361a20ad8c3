Move(0, 0, 0)
Move(0, 0, 0)
StandDown()
