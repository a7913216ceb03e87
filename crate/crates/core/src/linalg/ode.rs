use super::{ComplexVector, C64};

/// One classical fourth-order Runge-Kutta step of `y' = f(t, y)`.
pub fn rk4_step<F>(f: F, y: &ComplexVector, t: f64, dt: f64) -> ComplexVector
where
    F: Fn(f64, &ComplexVector) -> ComplexVector,
{
    debug_assert!(dt > 0.0, "rk4_step needs a positive step");
    let half = C64::new(0.5 * dt, 0.0);
    let k1 = f(t, y);
    let k2 = f(t + 0.5 * dt, &y.add_scaled(half, &k1));
    let k3 = f(t + 0.5 * dt, &y.add_scaled(half, &k2));
    let k4 = f(t + dt, &y.add_scaled(C64::new(dt, 0.0), &k3));
    let sixth = C64::new(dt / 6.0, 0.0);
    let third = C64::new(dt / 3.0, 0.0);
    y.add_scaled(sixth, &k1).add_scaled(third, &k2).add_scaled(third, &k3).add_scaled(sixth, &k4)
}
