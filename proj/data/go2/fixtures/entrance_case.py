def go_to_main_entrance():
    if obstacle_detected():
        Move(0, 0.3, 0)  # sidestep right
    else:
        Move(0.5, 0, 0)
