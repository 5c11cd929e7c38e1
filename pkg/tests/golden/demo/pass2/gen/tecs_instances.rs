// @generated by tecsoe; do not edit
use tecs_ex_ctrl::{TECSSemaphoreRef};
use kernel_cfg::{SEM_SENSOR1};

pub static SENSOR1_EX_CTRL: TECSSemaphoreRef = TECSSemaphoreRef::new(SEM_SENSOR1);
