use crate::t_ctrl::{EBodyForTCtrl};
use crate::tecs_signatures::{SBody, SLog, SMotor, SSensor};

impl<CSensorPort: SSensor, CMotorPort: SMotor, CLogPort: SLog> SBody for EBodyForTCtrl<CSensorPort, CMotorPort, CLogPort> {
    #[inline]
    fn run(&'static self) {
        let (port, var, _lg) = self.cell.get_cell_ref();
        // Developers implement the component behavior here.
    }
}
