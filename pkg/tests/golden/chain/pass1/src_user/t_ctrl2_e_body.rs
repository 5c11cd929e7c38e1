use crate::t_ctrl2::{EBodyForTCtrl2};
use crate::tecs_signatures::{SBody, SFilter};

impl<CFilterPort: SFilter> SBody for EBodyForTCtrl2<CFilterPort> {
    #[inline]
    fn run(&'static self) {
        let (port, var, _lg) = self.cell.get_cell_ref();
        // Developers implement the component behavior here.
    }
}
