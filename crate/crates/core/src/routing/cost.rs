//! Edge cost functions.
//!
//! Every kind is nonnegative, continuous and nondecreasing on its domain,
//! and `x * c(x)` is convex, so both the equilibrium potential and the
//! total cost are convex in the edge flows.

use alloc::boxed::Box;
use alloc::vec::Vec;

use super::RoutingError;

#[derive(Debug, Clone, PartialEq)]
pub enum CostFunction {
    /// `c`
    Constant { c: f64 },
    /// `a * x + b`
    Affine { a: f64, b: f64 },
    /// `a * x^d`
    Monomial { a: f64, d: f64 },
    /// `sum_i coefficients[i] * x^i`
    Polynomial { coefficients: Vec<f64> },
    /// M/M/1 delay `1 / (u - x)`, infinite at and beyond `u`.
    Mm1 { u: f64 },
    /// `max(base(x), level)` where `level = base(threshold)`.
    Floored { base: Box<CostFunction>, threshold: f64, level: f64 },
}

impl CostFunction {
    pub fn kind(&self) -> &'static str {
        match self {
            CostFunction::Constant { .. } => "constant",
            CostFunction::Affine { .. } => "affine",
            CostFunction::Monomial { .. } => "monomial",
            CostFunction::Polynomial { .. } => "polynomial",
            CostFunction::Mm1 { .. } => "mm1",
            CostFunction::Floored { .. } => "floored",
        }
    }

    pub fn validate(&self) -> Result<(), RoutingError> {
        let bad = |reason: &'static str| Err(RoutingError::InvalidCost { reason });
        let ok = |x: f64| x.is_finite() && x >= 0.0;
        match self {
            CostFunction::Constant { c } if !ok(*c) => bad("constant must be finite and nonnegative"),
            CostFunction::Affine { a, b } if !ok(*a) || !ok(*b) => bad("affine coefficients must be finite and nonnegative"),
            CostFunction::Monomial { a, d } if !ok(*a) || !ok(*d) => bad("monomial coefficient and degree must be finite and nonnegative"),
            CostFunction::Polynomial { coefficients } if coefficients.iter().any(|&c| !ok(c)) => {
                bad("polynomial coefficients must be finite and nonnegative")
            }
            CostFunction::Mm1 { u } if !(u.is_finite() && *u > 0.0) => bad("mm1 capacity must be finite and positive"),
            CostFunction::Floored { base, threshold, level } => {
                base.validate()?;
                if !ok(*threshold) || !ok(*level) {
                    return bad("floored threshold and level must be finite and nonnegative");
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Flow value at which the cost becomes infinite, if any.
    pub fn capacity(&self) -> Option<f64> {
        match self {
            CostFunction::Mm1 { u } => Some(*u),
            CostFunction::Floored { base, .. } => base.capacity(),
            _ => None,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            CostFunction::Constant { c } => *c,
            CostFunction::Affine { a, b } => a * x + b,
            CostFunction::Monomial { a, d } => a * powf(x, *d),
            CostFunction::Polynomial { coefficients } => horner(coefficients, x),
            CostFunction::Mm1 { u } => {
                if x < *u {
                    1.0 / (u - x)
                } else {
                    f64::INFINITY
                }
            }
            CostFunction::Floored { base, threshold, level } => {
                if x < *threshold {
                    *level
                } else {
                    base.eval(x).max(*level)
                }
            }
        }
    }

    /// `∫_0^x c(t) dt`
    pub fn primitive(&self, x: f64) -> f64 {
        match self {
            CostFunction::Constant { c } => c * x,
            CostFunction::Affine { a, b } => 0.5 * a * x * x + b * x,
            CostFunction::Monomial { a, d } => a * powf(x, d + 1.0) / (d + 1.0),
            CostFunction::Polynomial { coefficients } => {
                let mut acc = 0.0;
                for (i, c) in coefficients.iter().enumerate().rev() {
                    acc = acc * x + c / (i as f64 + 1.0);
                }
                acc * x
            }
            CostFunction::Mm1 { u } => {
                if x < *u {
                    -libm::log1p(-x / u)
                } else {
                    f64::INFINITY
                }
            }
            CostFunction::Floored { base, threshold, level } => {
                if x <= *threshold {
                    level * x
                } else {
                    level * threshold + base.primitive(x) - base.primitive(*threshold)
                }
            }
        }
    }

    /// `x * c(x)`
    pub fn total(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        x * self.eval(x)
    }

    /// `d/dx [x * c(x)] = c(x) + x * c'(x)`
    pub fn marginal(&self, x: f64) -> f64 {
        match self {
            CostFunction::Constant { c } => *c,
            CostFunction::Affine { a, b } => 2.0 * a * x + b,
            CostFunction::Monomial { a, d } => a * (d + 1.0) * powf(x, *d),
            CostFunction::Polynomial { coefficients } => {
                let mut acc = 0.0;
                for (i, c) in coefficients.iter().enumerate().rev() {
                    acc = acc * x + c * (i as f64 + 1.0);
                }
                acc
            }
            CostFunction::Mm1 { u } => {
                if x < *u {
                    u / ((u - x) * (u - x))
                } else {
                    f64::INFINITY
                }
            }
            CostFunction::Floored { base, threshold, level } => {
                if x < *threshold {
                    *level
                } else {
                    base.marginal(x).max(*level)
                }
            }
        }
    }

    /// `max(c(x), c(at))`, the pointwise maximum with the constant cost the
    /// edge has at flow `at`.
    pub fn floored_at(&self, at: f64) -> CostFunction {
        match self {
            CostFunction::Constant { .. } => self.clone(),
            _ if at <= 0.0 => self.clone(),
            _ => CostFunction::Floored { base: Box::new(self.clone()), threshold: at, level: self.eval(at) },
        }
    }

    /// `c(x / 2) / 2` in closed form.
    pub fn slowed(&self) -> CostFunction {
        match self {
            CostFunction::Constant { c } => CostFunction::Constant { c: c / 2.0 },
            CostFunction::Affine { a, b } => CostFunction::Affine { a: a / 4.0, b: b / 2.0 },
            CostFunction::Monomial { a, d } => CostFunction::Monomial { a: a / powf(2.0, d + 1.0), d: *d },
            CostFunction::Polynomial { coefficients } => CostFunction::Polynomial {
                coefficients: coefficients.iter().enumerate().map(|(i, c)| c / powf(2.0, i as f64 + 1.0)).collect(),
            },
            CostFunction::Mm1 { u } => CostFunction::Mm1 { u: 2.0 * u },
            CostFunction::Floored { base, threshold, level } => {
                CostFunction::Floored { base: Box::new(base.slowed()), threshold: 2.0 * threshold, level: level / 2.0 }
            }
        }
    }
}

fn horner(coefficients: &[f64], x: f64) -> f64 {
    coefficients.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

fn powf(x: f64, d: f64) -> f64 {
    if d == 0.0 {
        1.0
    } else {
        libm::pow(x, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn kinds() -> Vec<CostFunction> {
        vec![
            CostFunction::Constant { c: 1.5 },
            CostFunction::Affine { a: 2.0, b: 0.5 },
            CostFunction::Monomial { a: 1.0, d: 3.0 },
            CostFunction::Monomial { a: 0.7, d: 0.5 },
            CostFunction::Polynomial { coefficients: vec![0.25, 0.0, 1.5, 0.5] },
            CostFunction::Mm1 { u: 2.0 },
            CostFunction::Affine { a: 1.0, b: 0.0 }.floored_at(0.8),
        ]
    }

    fn simpson(f: impl Fn(f64) -> f64, hi: f64) -> f64 {
        let n = 2000;
        let h = hi / n as f64;
        let mut s = f(0.0) + f(hi);
        for i in 1..n {
            s += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        s * h / 3.0
    }

    #[test]
    fn primitive_matches_quadrature() {
        for c in kinds() {
            for &x in &[0.3, 1.0, 1.7] {
                // t = s^2 removes the endpoint singularity of fractional powers
                let quad = simpson(|s| 2.0 * s * c.eval(s * s), libm::sqrt(x));
                assert!((c.primitive(x) - quad).abs() < 1e-6, "{} at {x}: {} vs {quad}", c.kind(), c.primitive(x));
            }
        }
    }

    #[test]
    fn marginal_matches_finite_difference_of_total() {
        for c in kinds() {
            for &x in &[0.3, 1.1, 1.7] {
                let h = 1e-6;
                let fd = (c.total(x + h) - c.total(x - h)) / (2.0 * h);
                assert!((c.marginal(x) - fd).abs() < 1e-4 * (1.0 + fd.abs()), "{} at {x}", c.kind());
            }
        }
    }

    #[test]
    fn slowed_is_half_cost_at_half_flow() {
        for c in kinds() {
            let s = c.slowed();
            for &x in &[0.0, 0.4, 1.3, 3.5] {
                let expect = c.eval(x / 2.0) / 2.0;
                let got = s.eval(x);
                assert!((got - expect).abs() <= 1e-12 * (1.0 + expect.abs()), "{} at {x}: {got} vs {expect}", c.kind());
            }
        }
        assert_eq!(CostFunction::Mm1 { u: 2.0 }.slowed(), CostFunction::Mm1 { u: 4.0 });
        assert_eq!(CostFunction::Constant { c: 3.0 }.slowed(), CostFunction::Constant { c: 1.5 });
        assert_eq!(CostFunction::Affine { a: 1.0, b: 2.0 }.slowed(), CostFunction::Affine { a: 0.25, b: 1.0 });
    }

    #[test]
    fn mm1_is_infinite_at_capacity() {
        let c = CostFunction::Mm1 { u: 2.0 };
        assert_eq!(c.eval(1.0), 1.0);
        assert!(c.eval(2.0).is_infinite());
        assert!(c.primitive(2.5).is_infinite());
        assert_eq!(c.capacity(), Some(2.0));
    }

    #[test]
    fn floored_excess_is_bounded_by_the_floor() {
        for c in kinds() {
            for &at in &[0.5, 1.2] {
                let bar = c.floored_at(at);
                let floor = c.eval(at);
                for i in 0..=40 {
                    let x = i as f64 * 0.05;
                    if !c.eval(x).is_finite() {
                        continue;
                    }
                    let excess = bar.eval(x) - c.eval(x);
                    assert!(excess >= -1e-12 && excess <= floor + 1e-12, "{} at {x}", c.kind());
                    if x >= at {
                        assert!(excess.abs() < 1e-12);
                    }
                }
            }
        }
        let constant = CostFunction::Constant { c: 2.0 };
        assert_eq!(constant.floored_at(1.0), constant);
        let linear = CostFunction::Affine { a: 1.0, b: 0.0 }.floored_at(1.0);
        assert_eq!(linear.eval(0.3), 1.0);
        assert_eq!(linear.eval(1.5), 1.5);
    }

    #[test]
    fn validation_rejects_negative_parameters() {
        assert!(CostFunction::Affine { a: -1.0, b: 0.0 }.validate().is_err());
        assert!(CostFunction::Mm1 { u: 0.0 }.validate().is_err());
        assert!(CostFunction::Polynomial { coefficients: vec![1.0, f64::NAN] }.validate().is_err());
        for c in kinds() {
            c.validate().unwrap();
        }
    }
}
