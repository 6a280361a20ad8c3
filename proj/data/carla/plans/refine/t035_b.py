# task: park at the curb
def park():
    if stop_sign_observed() or car_observed() or pedestrian_observed():
        stop()
    else:
        stop()
    sleep(1)
