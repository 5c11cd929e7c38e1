// @generated by tecsoe; do not edit
use core::cell::{UnsafeCell};
use tecs_ex_ctrl::{LockManager, TECSMutexRef};
use crate::tecs_instances::{LOG1_EX_CTRL};

/// Celltype structure for tLogger.
pub struct TLogger {
    variable: &'static SyncTLoggerVar,
    ex_ctrl_ref: &'static TECSMutexRef,
}

/// Variable structure: the mutable state of one tLogger cell.
pub struct TLoggerVar {
    pub buf: i32,
}

/// Sync variable structure; access is serialized by the accessor below.
pub struct SyncTLoggerVar {
    unsafe_var: UnsafeCell<TLoggerVar>,
}

unsafe impl Sync for SyncTLoggerVar {}

pub struct ELogForTLogger {
    pub cell: &'static TLogger,
}

/// Releases the cell's exclusive control when dropped.
pub struct TLoggerLockGuard {
    ex_ctrl: &'static TECSMutexRef,
}

impl Drop for TLoggerLockGuard {
    fn drop(&mut self) {
        self.ex_ctrl.unlock();
    }
}

impl TLogger {
    #[inline]
    pub fn get_cell_ref(&'static self) -> (&'static Self, &'static mut TLoggerVar, TLoggerLockGuard) {
        self.ex_ctrl_ref.lock();
        (
            self,
            unsafe { &mut *self.variable.unsafe_var.get() },
            TLoggerLockGuard { ex_ctrl: self.ex_ctrl_ref },
        )
    }
}

pub static LOG1_VAR: SyncTLoggerVar = SyncTLoggerVar {
    unsafe_var: UnsafeCell::new(TLoggerVar {
        buf: 0,
    }),
};

pub static LOG1: TLogger = TLogger {
    variable: &LOG1_VAR,
    ex_ctrl_ref: &LOG1_EX_CTRL,
};

pub static LOG1_E_LOG: ELogForTLogger = ELogForTLogger { cell: &LOG1 };
