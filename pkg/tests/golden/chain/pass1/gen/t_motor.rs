// @generated by tecsoe; do not edit
use core::cell::{UnsafeCell};
use tecs_ex_ctrl::{LockManager, TECSMutexRef};
use crate::tecs_instances::{MOTOR1_EX_CTRL};

/// Celltype structure for tMotor.
pub struct TMotor {
    pub port: i32,
    variable: &'static SyncTMotorVar,
    ex_ctrl_ref: &'static TECSMutexRef,
}

/// Variable structure: the mutable state of one tMotor cell.
pub struct TMotorVar {
    pub speed: i32,
}

/// Sync variable structure; access is serialized by the accessor below.
pub struct SyncTMotorVar {
    unsafe_var: UnsafeCell<TMotorVar>,
}

unsafe impl Sync for SyncTMotorVar {}

pub struct EMotorForTMotor {
    pub cell: &'static TMotor,
}

/// Releases the cell's exclusive control when dropped.
pub struct TMotorLockGuard {
    ex_ctrl: &'static TECSMutexRef,
}

impl Drop for TMotorLockGuard {
    fn drop(&mut self) {
        self.ex_ctrl.unlock();
    }
}

impl TMotor {
    #[inline]
    pub fn get_cell_ref(&'static self) -> (&'static Self, &'static mut TMotorVar, TMotorLockGuard) {
        self.ex_ctrl_ref.lock();
        (
            self,
            unsafe { &mut *self.variable.unsafe_var.get() },
            TMotorLockGuard { ex_ctrl: self.ex_ctrl_ref },
        )
    }
}

pub static MOTOR1_VAR: SyncTMotorVar = SyncTMotorVar {
    unsafe_var: UnsafeCell::new(TMotorVar {
        speed: 0,
    }),
};

pub static MOTOR1: TMotor = TMotor {
    port: 3,
    variable: &MOTOR1_VAR,
    ex_ctrl_ref: &MOTOR1_EX_CTRL,
};

pub static MOTOR1_E_MOTOR: EMotorForTMotor = EMotorForTMotor { cell: &MOTOR1 };
