def survey():
    set_velocity_ned(0, 0, -0.5, 0)
    sleep_for(2)
    if obstacle_in_front():
        set_velocity_ned(0, 0, 0, 0)
    else:
        set_velocity_ned(2, 0, 0, 0)
    sleep_for(3)
    set_velocity_ned(0, 0, 0.5, 0)
