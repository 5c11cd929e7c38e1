// @generated by tecsoe; do not edit
use core::cell::{UnsafeCell};

/// Celltype structure for tFilter.
pub struct TFilter {
    variable: &'static SyncTFilterVar,
}

/// Variable structure: the mutable state of one tFilter cell.
pub struct TFilterVar {
    pub acc: i32,
}

/// Sync variable structure; access is serialized by the accessor below.
pub struct SyncTFilterVar {
    unsafe_var: UnsafeCell<TFilterVar>,
}

unsafe impl Sync for SyncTFilterVar {}

pub struct EFilterForTFilter {
    pub cell: &'static TFilter,
}

/// No exclusive control is needed for tFilter; this guard does nothing.
pub struct TFilterLockGuard;

impl TFilter {
    #[inline]
    pub fn get_cell_ref(&'static self) -> (&'static Self, &'static mut TFilterVar, TFilterLockGuard) {
        (
            self,
            unsafe { &mut *self.variable.unsafe_var.get() },
            TFilterLockGuard,
        )
    }
}

pub static FILTER1_VAR: SyncTFilterVar = SyncTFilterVar {
    unsafe_var: UnsafeCell::new(TFilterVar {
        acc: 0,
    }),
};

pub static FILTER1: TFilter = TFilter {
    variable: &FILTER1_VAR,
};

pub static FILTER1_E_FILTER: EFilterForTFilter = EFilterForTFilter { cell: &FILTER1 };
