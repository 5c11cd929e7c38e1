use crate::t_motor::{EMotorForTMotor};
use crate::tecs_signatures::{SMotor};

impl SMotor for EMotorForTMotor {
    #[inline]
    fn set_speed(&'static self, speed: i32) {
        let (port, var, _lg) = self.cell.get_cell_ref();
        // Developers implement the component behavior here.
    }

    #[inline]
    fn stop(&'static self) {
        let (port, var, _lg) = self.cell.get_cell_ref();
        // Developers implement the component behavior here.
    }
}
