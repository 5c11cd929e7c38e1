// @generated by tecsoe; do not edit
use core::cell::{UnsafeCell};
use tecs_ex_ctrl::{LockManager, TECSMutexRef};
use crate::t_filter::{EFilterForTFilter, FILTER1_E_FILTER};
use crate::tecs_instances::{CTRL2_EX_CTRL};
use crate::tecs_signatures::{SFilter};

/// Celltype structure for tCtrl2.
pub struct TCtrl2<CFilterPort: SFilter> {
    pub c_filter: &'static CFilterPort,
    variable: &'static SyncTCtrl2Var,
    ex_ctrl_ref: &'static TECSMutexRef,
}

/// Variable structure: the mutable state of one tCtrl2 cell.
pub struct TCtrl2Var {
    pub ticks: i32,
}

/// Sync variable structure; access is serialized by the accessor below.
pub struct SyncTCtrl2Var {
    unsafe_var: UnsafeCell<TCtrl2Var>,
}

unsafe impl Sync for SyncTCtrl2Var {}

pub struct EBodyForTCtrl2<CFilterPort: SFilter> {
    pub cell: &'static TCtrl2<CFilterPort>,
}

/// Releases the cell's exclusive control when dropped.
pub struct TCtrl2LockGuard {
    ex_ctrl: &'static TECSMutexRef,
}

impl Drop for TCtrl2LockGuard {
    fn drop(&mut self) {
        self.ex_ctrl.unlock();
    }
}

impl<CFilterPort: SFilter> TCtrl2<CFilterPort> {
    #[inline]
    pub fn get_cell_ref(&'static self) -> (&'static Self, &'static mut TCtrl2Var, TCtrl2LockGuard) {
        self.ex_ctrl_ref.lock();
        (
            self,
            unsafe { &mut *self.variable.unsafe_var.get() },
            TCtrl2LockGuard { ex_ctrl: self.ex_ctrl_ref },
        )
    }
}

pub static CTRL2_VAR: SyncTCtrl2Var = SyncTCtrl2Var {
    unsafe_var: UnsafeCell::new(TCtrl2Var {
        ticks: 0,
    }),
};

pub static CTRL2: TCtrl2<EFilterForTFilter> = TCtrl2 {
    c_filter: &FILTER1_E_FILTER,
    variable: &CTRL2_VAR,
    ex_ctrl_ref: &CTRL2_EX_CTRL,
};

pub static CTRL2_E_BODY: EBodyForTCtrl2<EFilterForTFilter> = EBodyForTCtrl2 { cell: &CTRL2 };
