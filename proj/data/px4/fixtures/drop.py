def land_fast():
    set_velocity_ned(1, 0, 0, 0, 0)
    set_velocity_ned(0, 0, 3, 0, 0)
    sleep_for(2)
