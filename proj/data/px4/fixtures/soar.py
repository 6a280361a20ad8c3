set_velocity_ned(0, 0, -2, 0)
sleep_for(5)
set_velocity_ned(0, 0, 0, 0)
