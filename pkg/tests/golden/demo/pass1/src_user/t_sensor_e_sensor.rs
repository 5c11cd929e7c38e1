use crate::t_sensor::{ESensorForTSensor};
use crate::tecs_signatures::{SSensor};

impl SSensor for ESensorForTSensor {
    #[inline]
    fn set_device_ref(&'static self) {
        let (port, var, _lg) = self.cell.get_cell_ref();
        // Developers implement the component behavior here.
    }

    #[inline]
    fn get_distance(&'static self) -> i32 {
        let (port, var, _lg) = self.cell.get_cell_ref();
        // Developers implement the component behavior here.
        todo!()
    }
}
