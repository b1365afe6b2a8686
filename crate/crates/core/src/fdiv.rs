//! Generic f-divergence evaluation and interval bound constructions.
//!
//! For a convex generator f with f(1) = 0, the divergence of a pair (P, Q) is
//!
//! ```text
//! C_f(P‖Q) = Σ q_i f(p_i/q_i)
//! ```
//!
//! Three upper bounds are built from the generator and the ratio extremes
//! `0 < r ≤ p_i/q_i ≤ R`:
//!
//! ```text
//! E = Σ (p_i - q_i) f'(p_i/q_i)              (first-derivative sum)
//! A = (R - r)(f'(R) - f'(r))/4               (endpoint derivative spread)
//! B = ((R-1)f(r) + (1-r)f(R))/(R - r)        (chord interpolation, r ≠ R)
//! ```
//!
//! and they chain as `0 ≤ C_f ≤ E ≤ A`, `0 ≤ C_f ≤ B ≤ A`, `0 ≤ B - C_f ≤ A`.
//! Two divergences are compared through the extrema of `f₁''/f₂''` on [r, R]:
//! with `m ≤ f₁''/f₂'' ≤ M` there, `m·C_f₂ ≤ C_f₁ ≤ M·C_f₂`.

use thiserror::Error;

use crate::simplex::DistributionPair;

#[derive(Debug, Error)]
pub enum FdivError {
    #[error("interval is degenerate: r = R = {0}")]
    DegenerateInterval(f64),

    #[error("logarithmic mean requires positive finite arguments, got ({0}, {1})")]
    NonPositiveArgument(f64, f64),
}

#[derive(Debug, Error)]
pub enum GeneratorError {
    #[error("generator '{name}' is not normalized: f(1) = {value}, expected 0 within 1e-12")]
    NotNormalized { name: &'static str, value: f64 },

    #[error("generator '{name}' fails the convexity probe at x = {x}: f''(x) = {value}")]
    NotConvex {
        name: &'static str,
        x: f64,
        value: f64,
    },

    #[error(
        "generator '{name}': {which} disagrees with finite differences at x = {x}: \
         analytic {analytic}, numeric {numeric}"
    )]
    DerivativeMismatch {
        name: &'static str,
        which: &'static str,
        x: f64,
        analytic: f64,
        numeric: f64,
    },
}

/// Number of points in the logarithmic probe grid used by [`Generator::validate`].
pub const PROBE_POINTS: usize = 512;
const PROBE_LO_EXP: f64 = -4.0;
const PROBE_HI_EXP: f64 = 4.0;

/// The logarithmic probe grid: 512 points spanning [1e-4, 1e4].
pub fn probe_grid() -> impl Iterator<Item = f64> {
    (0..PROBE_POINTS).map(|i| {
        let t = i as f64 / (PROBE_POINTS - 1) as f64;
        10f64.powf(PROBE_LO_EXP + (PROBE_HI_EXP - PROBE_LO_EXP) * t)
    })
}

/// Seven-point central first derivative, accurate enough to resolve the
/// probe-grid consistency tolerance even where the target derivative is many
/// orders of magnitude below the differenced function.
fn fd7(g: impl Fn(f64) -> f64, x: f64) -> f64 {
    let h = x / 40.0;
    (g(x + 3.0 * h) - 9.0 * g(x + 2.0 * h) + 45.0 * g(x + h) - 45.0 * g(x - h)
        + 9.0 * g(x - 2.0 * h)
        - g(x - 3.0 * h))
        / (60.0 * h)
}

/// A convex normalized generator: f together with its first two derivatives.
#[derive(Debug, Clone, Copy)]
pub struct Generator {
    name: &'static str,
    f: fn(f64) -> f64,
    df: fn(f64) -> f64,
    d2f: fn(f64) -> f64,
}

impl Generator {
    /// Bundle a generator without probing it. Use [`Generator::checked`] for
    /// functions that have not been validated elsewhere (the built-in catalog
    /// generators are covered by the test suite).
    pub const fn from_parts(
        name: &'static str,
        f: fn(f64) -> f64,
        df: fn(f64) -> f64,
        d2f: fn(f64) -> f64,
    ) -> Self {
        Self { name, f, df, d2f }
    }

    /// Bundle a generator and run the full probe validation on it.
    pub fn checked(
        name: &'static str,
        f: fn(f64) -> f64,
        df: fn(f64) -> f64,
        d2f: fn(f64) -> f64,
    ) -> Result<Self, GeneratorError> {
        let gen = Self::from_parts(name, f, df, d2f);
        gen.validate()?;
        Ok(gen)
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn f(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn df(&self, x: f64) -> f64 {
        (self.df)(x)
    }

    pub fn d2f(&self, x: f64) -> f64 {
        (self.d2f)(x)
    }

    /// Probe the generator invariants:
    ///
    /// * f(1) = 0 within 1e-12;
    /// * f''(x) > 0 on the whole probe grid;
    /// * f' and f'' agree with finite differences of f and f' within
    ///   relative 1e-6 on the probe grid.
    pub fn validate(&self) -> Result<(), GeneratorError> {
        let at_one = self.f(1.0);
        if at_one.abs() > 1e-12 {
            return Err(GeneratorError::NotNormalized {
                name: self.name,
                value: at_one,
            });
        }
        for x in probe_grid() {
            let curvature = self.d2f(x);
            if curvature.is_nan() || curvature <= 0.0 {
                return Err(GeneratorError::NotConvex {
                    name: self.name,
                    x,
                    value: curvature,
                });
            }
            let fd_df = fd7(self.f, x);
            let analytic = self.df(x);
            if (fd_df - analytic).abs() > 1e-6 * analytic.abs().max(1e-12) {
                return Err(GeneratorError::DerivativeMismatch {
                    name: self.name,
                    which: "f'",
                    x,
                    analytic,
                    numeric: fd_df,
                });
            }
            let fd_d2f = fd7(self.df, x);
            if (fd_d2f - curvature).abs() > 1e-6 * curvature.abs() {
                return Err(GeneratorError::DerivativeMismatch {
                    name: self.name,
                    which: "f''",
                    x,
                    analytic: curvature,
                    numeric: fd_d2f,
                });
            }
        }
        Ok(())
    }
}

/// `C_f(P‖Q) = Σ q_i f(p_i/q_i)`. Nonnegative up to roundoff for any convex
/// normalized generator.
pub fn csiszar(gen: &Generator, pair: &DistributionPair) -> f64 {
    pair.p()
        .probs()
        .iter()
        .zip(pair.q().probs())
        .map(|(&pi, &qi)| qi * gen.f(pi / qi))
        .sum()
}

/// `E = Σ (p_i - q_i) f'(p_i/q_i)`, an upper bound on `C_f`.
pub fn e_bound(gen: &Generator, pair: &DistributionPair) -> f64 {
    pair.p()
        .probs()
        .iter()
        .zip(pair.q().probs())
        .map(|(&pi, &qi)| (pi - qi) * gen.df(pi / qi))
        .sum()
}

/// `A = (R - r)(f'(R) - f'(r))/4`; nonnegative since f' is nondecreasing.
pub fn a_bound(gen: &Generator, r: f64, big_r: f64) -> f64 {
    0.25 * (big_r - r) * (gen.df(big_r) - gen.df(r))
}

/// `B = ((R-1)f(r) + (1-r)f(R))/(R - r)`, defined for `0 < r ≤ 1 ≤ R`, r ≠ R.
pub fn b_bound(gen: &Generator, r: f64, big_r: f64) -> Result<f64, FdivError> {
    if r == big_r {
        return Err(FdivError::DegenerateInterval(r));
    }
    Ok(((big_r - 1.0) * gen.f(r) + (1.0 - r) * gen.f(big_r)) / (big_r - r))
}

/// Inverse logarithmic mean `(ln b - ln a)/(b - a)`, with the continuous
/// limit `1/a` on the diagonal.
///
/// Evaluated as `2·atanh((b-a)/(b+a))/(b-a)`, which is exact in the same
/// sense as the textbook quotient but free of log cancellation when a ≈ b.
pub fn log_mean_inverse(a: f64, b: f64) -> Result<f64, FdivError> {
    if !a.is_finite() || !b.is_finite() || a <= 0.0 || b <= 0.0 {
        return Err(FdivError::NonPositiveArgument(a, b));
    }
    if (a - b).abs() <= 1e-13 * a.max(b) {
        return Ok(1.0 / a);
    }
    let d = b - a;
    Ok(2.0 * (d / (b + a)).atanh() / d)
}

/// The value/E/A/B bundle for one generator on one pair.
///
/// Invariants (up to slack `1e-9·max(1, a)`): `0 ≤ value ≤ e ≤ a`, and when
/// `b` is present `0 ≤ value ≤ b ≤ a` and `0 ≤ b - value ≤ a`. `b` is absent
/// exactly when the pair is degenerate (r = R).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DragomirBounds {
    pub value: f64,
    pub e: f64,
    pub a: f64,
    pub b: Option<f64>,
}

impl DragomirBounds {
    pub fn slack(&self) -> f64 {
        1e-9 * self.a.abs().max(1.0)
    }

    /// Check the full bound chain at the standard slack.
    pub fn chain_holds(&self) -> bool {
        let s = self.slack();
        let mut ok = self.value >= -s && self.value <= self.e + s && self.e <= self.a + s;
        if let Some(b) = self.b {
            ok = ok
                && self.value <= b + s
                && b <= self.a + s
                && b - self.value >= -s
                && b - self.value <= self.a + s;
        }
        ok
    }
}

/// Assemble value, E, A and B for `gen` on `pair`, using the pair's cached
/// ratio extremes. A degenerate interval leaves `b` absent.
pub fn dragomir_bounds(gen: &Generator, pair: &DistributionPair) -> DragomirBounds {
    let (r, big_r) = (pair.ratio_min(), pair.ratio_max());
    DragomirBounds {
        value: csiszar(gen, pair),
        e: e_bound(gen, pair),
        a: a_bound(gen, r, big_r),
        b: b_bound(gen, r, big_r).ok(),
    }
}

/// Extrema of a curvature ratio over an interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioExtrema {
    pub lower: f64,
    pub upper: f64,
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section minimum of `g` on [lo, hi]; returns the best value seen.
fn golden_min(g: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = g(x1);
    let mut f2 = g(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = g(x2);
        }
    }
    f1.min(f2)
}

/// Numerically extract inf and sup of `x ↦ gen1.f''(x)/gen2.f''(x)` over
/// [r, R]: a 2049-point uniform scan, then golden-section refinement of the
/// bracket around each candidate until the bracket width drops below
/// `1e-12·(R - r + 1)`. A degenerate interval returns the point ratio.
///
/// Requires `gen2.f''` strictly positive on [r, R].
pub fn ratio_extrema(gen1: &Generator, gen2: &Generator, r: f64, big_r: f64) -> RatioExtrema {
    let g = |x: f64| gen1.d2f(x) / gen2.d2f(x);
    if r == big_r {
        let v = g(r);
        return RatioExtrema { lower: v, upper: v };
    }
    const GRID: usize = 2049;
    let step = (big_r - r) / (GRID - 1) as f64;
    let mut best_min = (f64::INFINITY, 0usize);
    let mut best_max = (f64::NEG_INFINITY, 0usize);
    for i in 0..GRID {
        let x = if i == GRID - 1 {
            big_r
        } else {
            r + step * i as f64
        };
        let v = g(x);
        if v < best_min.0 {
            best_min = (v, i);
        }
        if v > best_max.0 {
            best_max = (v, i);
        }
    }
    let tol = 1e-12 * (big_r - r + 1.0);
    let bracket = |i: usize| {
        let lo = if i == 0 { r } else { r + step * (i - 1) as f64 };
        let hi = if i >= GRID - 2 {
            big_r
        } else {
            r + step * (i + 1) as f64
        };
        (lo, hi)
    };
    let (lo, hi) = bracket(best_min.1);
    let lower = best_min.0.min(golden_min(&g, lo, hi, tol));
    let neg = |x: f64| -g(x);
    let (lo, hi) = bracket(best_max.1);
    let upper = best_max.0.max(-golden_min(&neg, lo, hi, tol));
    RatioExtrema { lower, upper }
}

/// Outcome of sandwiching `C_f₁` between `m·C_f₂` and `M·C_f₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonReport {
    pub extrema: RatioExtrema,
    /// `C_f₁(P‖Q)`
    pub first: f64,
    /// `C_f₂(P‖Q)`
    pub second: f64,
    pub pass: bool,
}

/// Compare two divergences on a pair through their curvature-ratio extrema,
/// asserting `m·C_f₂ - slack ≤ C_f₁ ≤ M·C_f₂ + slack` with slack
/// `1e-9·max(1, M·C_f₂)`.
pub fn compare(gen1: &Generator, gen2: &Generator, pair: &DistributionPair) -> ComparisonReport {
    let extrema = ratio_extrema(gen1, gen2, pair.ratio_min(), pair.ratio_max());
    let first = csiszar(gen1, pair);
    let second = csiszar(gen2, pair);
    let slack = 1e-9 * (extrema.upper * second).abs().max(1.0);
    let pass = extrema.lower * second - slack <= first && first <= extrema.upper * second + slack;
    ComparisonReport {
        extrema,
        first,
        second,
        pass,
    }
}
