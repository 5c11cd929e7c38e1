// @generated by tecsoe; do not edit
use core::cell::{UnsafeCell};

/// Celltype structure for tLogger.
pub struct TLogger {
    variable: &'static SyncTLoggerVar,
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

/// No exclusive control is needed for tLogger; this guard does nothing.
pub struct TLoggerLockGuard;

impl TLogger {
    #[inline]
    pub fn get_cell_ref(&'static self) -> (&'static Self, &'static mut TLoggerVar, TLoggerLockGuard) {
        (
            self,
            unsafe { &mut *self.variable.unsafe_var.get() },
            TLoggerLockGuard,
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
};

pub static LOG1_E_LOG: ELogForTLogger = ELogForTLogger { cell: &LOG1 };
