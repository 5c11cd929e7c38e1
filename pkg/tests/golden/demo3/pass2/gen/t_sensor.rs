// @generated by tecsoe; do not edit
use core::cell::{UnsafeCell};
use tecs_ex_ctrl::{LockManager, TECSMutexRef};
use crate::tecs_instances::{SENSOR1_EX_CTRL};

/// Celltype structure for tSensor.
pub struct TSensor {
    pub port: i32,
    variable: &'static SyncTSensorVar,
    ex_ctrl_ref: &'static TECSMutexRef,
}

/// Variable structure: the mutable state of one tSensor cell.
pub struct TSensorVar {
    pub last: i32,
}

/// Sync variable structure; access is serialized by the accessor below.
pub struct SyncTSensorVar {
    unsafe_var: UnsafeCell<TSensorVar>,
}

unsafe impl Sync for SyncTSensorVar {}

pub struct ESensorForTSensor {
    pub cell: &'static TSensor,
}

/// Releases the cell's exclusive control when dropped.
pub struct TSensorLockGuard {
    ex_ctrl: &'static TECSMutexRef,
}

impl Drop for TSensorLockGuard {
    fn drop(&mut self) {
        self.ex_ctrl.unlock();
    }
}

impl TSensor {
    #[inline]
    pub fn get_cell_ref(&'static self) -> (&'static Self, &'static mut TSensorVar, TSensorLockGuard) {
        self.ex_ctrl_ref.lock();
        (
            self,
            unsafe { &mut *self.variable.unsafe_var.get() },
            TSensorLockGuard { ex_ctrl: self.ex_ctrl_ref },
        )
    }
}

pub static SENSOR1_VAR: SyncTSensorVar = SyncTSensorVar {
    unsafe_var: UnsafeCell::new(TSensorVar {
        last: 0,
    }),
};

pub static SENSOR1: TSensor = TSensor {
    port: 1,
    variable: &SENSOR1_VAR,
    ex_ctrl_ref: &SENSOR1_EX_CTRL,
};

pub static SENSOR1_E_SENSOR: ESensorForTSensor = ESensorForTSensor { cell: &SENSOR1 };
