def rise_to_limit():
    while attitude_limit(5):
        set_velocity_ned(0, 0, -0.5, 0)
        sleep_for(1)
    set_velocity_ned(0, 0, 0, 0)
