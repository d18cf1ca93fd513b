//! Foundation numerics: complex log-gamma, Bessel functions of imaginary
//! order, adaptive quadrature, numerical Fourier transforms, and the
//! log-scaled value type every gamma-heavy module shares.

pub mod bessel;
pub mod gamma;
pub mod quad;

pub use bessel::{bessel_j_kernel, bessel_k_imag, bessel_k_imag_scaled};
pub use gamma::{gamma, log_gamma, log_gamma_real};
pub use quad::{
    fourier_hat, gl16, gl32, gl_panels, gl_panels_c, integrate, integrate_c, integrate_zero_inf,
    KahanSum, KahanSumC, QuadKind, QuadResult, QuadratureSpec,
};

use num_complex::Complex64;

/// A complex number kept as log-magnitude plus phase, for gamma products and
/// degree-300 polynomial weights that overflow f64 by hundreds of orders.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogComplex {
    pub ln_mag: f64,
    pub arg: f64,
}

impl LogComplex {
    pub fn zero() -> Self {
        Self { ln_mag: f64::NEG_INFINITY, arg: 0.0 }
    }

    pub fn one() -> Self {
        Self { ln_mag: 0.0, arg: 0.0 }
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self { ln_mag: z.norm().ln(), arg: z.arg() }
    }

    /// From log z = ln|z| + i arg z (any branch); the phase is wrapped.
    pub fn from_log(log_z: Complex64) -> Self {
        Self { ln_mag: log_z.re, arg: wrap_angle(log_z.im) }
    }

    pub fn mul(self, other: Self) -> Self {
        Self { ln_mag: self.ln_mag + other.ln_mag, arg: wrap_angle(self.arg + other.arg) }
    }

    pub fn div(self, other: Self) -> Self {
        Self { ln_mag: self.ln_mag - other.ln_mag, arg: wrap_angle(self.arg - other.arg) }
    }

    pub fn is_zero(&self) -> bool {
        self.ln_mag == f64::NEG_INFINITY
    }

    /// Value as an ordinary complex number (may overflow to inf).
    pub fn to_complex(self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar(self.ln_mag.exp(), self.arg)
    }

    /// Value divided by e^{offset}, for comparing quantities at a common scale.
    pub fn to_complex_scaled(self, offset: f64) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar((self.ln_mag - offset).exp(), self.arg)
    }
}

/// Wrap an angle into (-pi, pi].
pub fn wrap_angle(a: f64) -> f64 {
    if !a.is_finite() {
        return a;
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut x = a % two_pi;
    if x > std::f64::consts::PI {
        x -= two_pi;
    } else if x <= -std::f64::consts::PI {
        x += two_pi;
    }
    x
}

/// A vertical-line contour Re s = sigma, truncated at |Im s| <= height_cutoff,
/// sampled with node_density points per unit height.
#[derive(Debug, Clone, Copy)]
pub struct ContourSpec {
    pub sigma: f64,
    pub height_cutoff: f64,
    pub node_density: f64,
}

impl ContourSpec {
    pub fn new(sigma: f64, height_cutoff: f64, node_density: f64) -> crate::error::Result<Self> {
        if height_cutoff <= 0.0 || node_density <= 0.0 {
            return Err(crate::error::Error::InvalidConfig(
                "contour height_cutoff and node_density must be > 0".into(),
            ));
        }
        Ok(Self { sigma, height_cutoff, node_density })
    }
}
