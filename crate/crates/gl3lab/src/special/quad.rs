//! Adaptive quadrature: composite Gauss-Legendre with dyadic refinement and a
//! tanh-sinh (double exponential) rule for endpoint singularities and
//! half-infinite ranges. Sums are compensated (Kahan).

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Which base rule an adaptive integration uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadKind {
    GaussLegendre,
    DoubleExponential,
}

/// Tolerances and refinement budget for adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub kind: QuadKind,
    pub max_refinements: u32,
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl QuadratureSpec {
    pub fn new(kind: QuadKind, max_refinements: u32, abs_tol: f64, rel_tol: f64) -> Result<Self> {
        if abs_tol <= 0.0 || rel_tol <= 0.0 {
            return Err(Error::InvalidConfig("tolerances must be > 0".into()));
        }
        if max_refinements == 0 {
            return Err(Error::InvalidConfig("max_refinements must be >= 1".into()));
        }
        Ok(Self { kind, max_refinements, abs_tol, rel_tol })
    }

    pub fn default_gl() -> Self {
        Self { kind: QuadKind::GaussLegendre, max_refinements: 14, abs_tol: 1e-13, rel_tol: 1e-12 }
    }

    pub fn default_de() -> Self {
        Self { kind: QuadKind::DoubleExponential, max_refinements: 10, abs_tol: 1e-13, rel_tol: 1e-12 }
    }
}

/// Value plus an error estimate from the last refinement step.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult<T> {
    pub value: T,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Compensated (Kahan) accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    c: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Kahan accumulator for complex values.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSumC {
    re: KahanSum,
    im: KahanSum,
}

impl KahanSumC {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

fn legendre_nodes(n: usize) -> Vec<(f64, f64)> {
    // Newton iteration on P_n; nodes for [-1, 1].
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0_f64, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0_f64, x);
        for k in 2..=n {
            let kf = k as f64;
            let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((-x, w));
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

/// 16-point Gauss-Legendre nodes and weights on [-1, 1].
pub fn gl16() -> &'static [(f64, f64)] {
    static CELL: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    CELL.get_or_init(|| legendre_nodes(16))
}

/// 32-point Gauss-Legendre nodes and weights on [-1, 1].
pub fn gl32() -> &'static [(f64, f64)] {
    static CELL: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    CELL.get_or_init(|| legendre_nodes(32))
}

/// Fixed-panel Gauss-Legendre over [a, b] with `panels` subdivisions (complex integrand).
pub fn gl_panels_c(f: &mut dyn FnMut(f64) -> Complex64, a: f64, b: f64, panels: usize) -> Complex64 {
    let nodes = gl16();
    let h = (b - a) / panels as f64;
    let mut acc = KahanSumC::new();
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        for &(x, w) in nodes {
            acc.add(f(mid + 0.5 * h * x) * (0.5 * h * w));
        }
    }
    acc.value()
}

/// Fixed-panel Gauss-Legendre over [a, b] (real integrand).
pub fn gl_panels(f: &mut dyn FnMut(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let nodes = gl16();
    let h = (b - a) / panels as f64;
    let mut acc = KahanSum::new();
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        for &(x, w) in nodes {
            acc.add(f(mid + 0.5 * h * x) * (0.5 * h * w));
        }
    }
    acc.value()
}

fn tanh_sinh_pass(f: &mut dyn FnMut(f64) -> Complex64, a: f64, b: f64, h: f64, evals: &mut usize) -> Complex64 {
    // x = c + r*tanh((pi/2) sinh(t)); node positions near the endpoints are
    // carried as distances 1 - |tanh| = 2 e^{-2 s}/(1 + e^{-2 s}) so that the
    // clustering survives f64 rounding.
    let r = 0.5 * (b - a);
    let t_max = 6.2;
    let n = (t_max / h).ceil() as i64;
    let mut acc = KahanSumC::new();
    for j in -n..=n {
        let t = j as f64 * h;
        let sh = (std::f64::consts::FRAC_PI_2) * t.sinh();
        let e2 = (-2.0 * sh.abs()).exp();
        let dist = 2.0 * e2 / (1.0 + e2); // 1 - |tanh(sh)|
        // w = (pi/2) cosh(t) / cosh^2(sh), in underflow-safe form
        let w = 2.0 * std::f64::consts::PI * t.cosh() * e2 / ((1.0 + e2) * (1.0 + e2));
        let xx = if sh >= 0.0 { b - r * dist } else { a + r * dist };
        if !(w * r).is_normal() || xx <= a || xx >= b {
            continue;
        }
        *evals += 1;
        acc.add(f(xx) * (r * w * h));
    }
    acc.value()
}

/// Adaptive integration of a complex integrand over the finite interval [a, b].
pub fn integrate_c(
    f: &mut dyn FnMut(f64) -> Complex64,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult<Complex64>> {
    let mut evals = 0usize;
    let mut prev: Option<Complex64> = None;
    match spec.kind {
        QuadKind::GaussLegendre => {
            let mut panels = 1usize;
            for _ in 0..spec.max_refinements {
                let cur = gl_panels_c(f, a, b, panels);
                evals += panels * 16;
                if let Some(p) = prev {
                    let err = (cur - p).norm();
                    if err <= spec.abs_tol.max(spec.rel_tol * cur.norm()) {
                        return Ok(QuadResult { value: cur, error_estimate: err, evaluations: evals });
                    }
                }
                prev = Some(cur);
                panels *= 2;
            }
        }
        QuadKind::DoubleExponential => {
            let mut h = 0.5;
            for _ in 0..spec.max_refinements {
                let cur = tanh_sinh_pass(f, a, b, h, &mut evals);
                if let Some(p) = prev {
                    let err = (cur - p).norm();
                    if err <= spec.abs_tol.max(spec.rel_tol * cur.norm()) {
                        return Ok(QuadResult { value: cur, error_estimate: err, evaluations: evals });
                    }
                }
                prev = Some(cur);
                h *= 0.5;
            }
        }
    }
    let best = prev.unwrap_or_default();
    Err(Error::ConvergenceFailure { value: best.norm(), estimate: f64::NAN })
}

/// Adaptive integration of a real integrand over [a, b].
pub fn integrate(
    f: &mut dyn FnMut(f64) -> f64,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult<f64>> {
    let mut g = |x: f64| Complex64::new(f(x), 0.0);
    let r = integrate_c(&mut g, a, b, spec)?;
    Ok(QuadResult { value: r.value.re, error_estimate: r.error_estimate, evaluations: r.evaluations })
}

/// Integration over (0, inf) through the exp map x = e^t, for integrands with
/// power behavior at 0 and (at least) exponential decay at infinity.
pub fn integrate_zero_inf(
    f: &mut dyn FnMut(f64) -> f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult<f64>> {
    // Pick the t-window adaptively: expand until the mapped integrand is dead.
    let mut g = |t: f64| {
        let x = t.exp();
        f(x) * x
    };
    let (mut lo, mut hi) = (-4.0_f64, 4.0_f64);
    for _ in 0..60 {
        if g(lo).abs() > 1e-305 && lo > -700.0 {
            lo -= 2.0;
        } else {
            break;
        }
    }
    for _ in 0..60 {
        if g(hi).abs() > 1e-305 && hi < 700.0 {
            hi += 2.0;
        } else {
            break;
        }
    }
    let mut gc = |t: f64| Complex64::new(g(t), 0.0);
    let r = integrate_c(&mut gc, lo, hi, spec)?;
    Ok(QuadResult { value: r.value.re, error_estimate: r.error_estimate, evaluations: r.evaluations })
}

/// Fourier transform hat(g)(y) = int g(x) e(-x y) dx of a smooth function
/// supported on [a, b]; panel density tracks the oscillation rate.
pub fn fourier_hat(
    g: &mut dyn FnMut(f64) -> Complex64,
    a: f64,
    b: f64,
    y: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult<Complex64>> {
    let tp = 2.0 * std::f64::consts::PI;
    let cycles = (y.abs() * (b - a)).ceil() as usize + 1;
    let base = (4 * cycles).max(8);
    let mut f = |x: f64| {
        let ph = -tp * x * y;
        g(x) * Complex64::new(ph.cos(), ph.sin())
    };
    // refine from an oscillation-aware panel count
    let mut prev: Option<Complex64> = None;
    let mut panels = base;
    let mut evals = 0usize;
    for _ in 0..spec.max_refinements {
        let cur = gl_panels_c(&mut f, a, b, panels);
        evals += 16 * panels;
        if let Some(p) = prev {
            let err = (cur - p).norm();
            if err <= spec.abs_tol.max(spec.rel_tol * cur.norm()) {
                return Ok(QuadResult { value: cur, error_estimate: err, evaluations: evals });
            }
        }
        prev = Some(cur);
        panels *= 2;
    }
    let best = prev.unwrap_or_default();
    Err(Error::ConvergenceFailure { value: best.norm(), estimate: f64::NAN })
}
