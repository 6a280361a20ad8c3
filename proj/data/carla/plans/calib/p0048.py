# task: park at the curb
def park():
    if car_observed() or green_light_observed() or stop_sign_observed():
        stop()
    else:
        stop()
    sleep(1)
