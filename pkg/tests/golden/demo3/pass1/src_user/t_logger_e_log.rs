use crate::t_logger::{ELogForTLogger};
use crate::tecs_signatures::{SLog};

impl SLog for ELogForTLogger {
    #[inline]
    fn put(&'static self, value: i32) {
        let (port, var, _lg) = self.cell.get_cell_ref();
        // Developers implement the component behavior here.
    }
}
