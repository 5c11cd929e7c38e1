// @generated by tecsoe; do not edit

pub trait SBody {
    fn run(&'static self);
}

pub trait SLog {
    fn put(&'static self, value: i32);
}

pub trait SMotor {
    fn set_speed(&'static self, speed: i32);
    fn stop(&'static self);
}

pub trait SSensor {
    fn set_device_ref(&'static self);
    fn get_distance(&'static self) -> i32;
}
