// @generated by tecsoe; do not edit
use tecs_ex_ctrl::{TECSMutexRef};
use kernel_cfg::{MTX_CTRL2, MTX_FILTER1, MTX_LOG1, MTX_MOTOR1, MTX_SENSOR1};

pub static CTRL2_EX_CTRL: TECSMutexRef = TECSMutexRef::new(MTX_CTRL2);
pub static FILTER1_EX_CTRL: TECSMutexRef = TECSMutexRef::new(MTX_FILTER1);
pub static LOG1_EX_CTRL: TECSMutexRef = TECSMutexRef::new(MTX_LOG1);
pub static MOTOR1_EX_CTRL: TECSMutexRef = TECSMutexRef::new(MTX_MOTOR1);
pub static SENSOR1_EX_CTRL: TECSMutexRef = TECSMutexRef::new(MTX_SENSOR1);
