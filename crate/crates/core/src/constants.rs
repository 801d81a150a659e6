/// Speed of light in vacuum, m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Reduced Planck constant, J s (CODATA 2018, exact).
pub const HBAR: f64 = 1.054_571_817e-34;
