// @generated by tecsoe; do not edit
use core::cell::{UnsafeCell};

/// Celltype structure for tMotor.
pub struct TMotor {
    pub port: i32,
    variable: &'static SyncTMotorVar,
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

/// No exclusive control is needed for tMotor; this guard does nothing.
pub struct TMotorLockGuard;

impl TMotor {
    #[inline]
    pub fn get_cell_ref(&'static self) -> (&'static Self, &'static mut TMotorVar, TMotorLockGuard) {
        (
            self,
            unsafe { &mut *self.variable.unsafe_var.get() },
            TMotorLockGuard,
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
};

pub static MOTOR1_E_MOTOR: EMotorForTMotor = EMotorForTMotor { cell: &MOTOR1 };
