//! Sandwich relations between the non-symmetric and symmetric measures.
//!
//! Each relation bounds a non-symmetric measure (rel_j, rel_js, rel_ag) by a
//! symmetric one (triangular, j, js, ag) through the extrema of the ratio of
//! their generator curvatures on [r, R]:
//!
//! ```text
//! m(r, R) · rhs ≤ lhs ≤ M(r, R) · rhs
//! ```
//!
//! The coefficient formulas are analytic; [`cross_check`] validates them
//! against the numeric extrema engine in [`crate::fdiv`]. The module also
//! carries the classical inequality chains among the symmetric measures and
//! the ratio certificates: per-pair statistics built from two divergences
//! that provably land inside [r, R].

use thiserror::Error;

use crate::catalog::{self, MeasureId};
use crate::fdiv::{ratio_extrema, RatioExtrema};
use crate::report::Check;
use crate::simplex::DistributionPair;

#[derive(Debug, Error)]
pub enum RelationError {
    #[error("interval must satisfy 0 < r <= 1 <= R, got r = {r}, R = {big_r}")]
    BadInterval { r: f64, big_r: f64 },

    #[error("pair is degenerate (p = q): certificate denominators vanish")]
    DegeneratePair,

    #[error("unknown relation name '{0}'")]
    UnknownRelation(String),

    #[error("certificate radicand is negative beyond tolerance: 2T - G = {0}")]
    NegativeRadicand(f64),
}

/// The ten relations, named `<lhs>-<rhs>` with the short symbols
/// d = rel_j, f = rel_js, g = rel_ag, delta = triangular, j = j, i = js,
/// t = ag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    RelJVsTriangular,
    RelJVsJ,
    RelJVsJs,
    RelJsVsTriangular,
    RelJsVsJ,
    RelJsVsJs,
    RelAgVsTriangular,
    RelAgVsJ,
    RelAgVsJs,
    RelAgVsAg,
}

/// Monotonicity of a curvature ratio on (0, ∞).
enum Shape {
    Increasing,
    Decreasing,
    /// Increasing up to the peak, decreasing after it.
    PeakAt(f64),
}

impl Relation {
    pub const ALL: [Relation; 10] = [
        Relation::RelJVsTriangular,
        Relation::RelJVsJ,
        Relation::RelJVsJs,
        Relation::RelJsVsTriangular,
        Relation::RelJsVsJ,
        Relation::RelJsVsJs,
        Relation::RelAgVsTriangular,
        Relation::RelAgVsJ,
        Relation::RelAgVsJs,
        Relation::RelAgVsAg,
    ];

    /// Stable identifier used by the CLI and check names.
    pub fn name(self) -> &'static str {
        match self {
            Relation::RelJVsTriangular => "d-delta",
            Relation::RelJVsJ => "d-j",
            Relation::RelJVsJs => "d-i",
            Relation::RelJsVsTriangular => "f-delta",
            Relation::RelJsVsJ => "f-j",
            Relation::RelJsVsJs => "f-i",
            Relation::RelAgVsTriangular => "g-delta",
            Relation::RelAgVsJ => "g-j",
            Relation::RelAgVsJs => "g-i",
            Relation::RelAgVsAg => "g-t",
        }
    }

    pub fn from_name(name: &str) -> Result<Self, RelationError> {
        Relation::ALL
            .iter()
            .copied()
            .find(|r| r.name() == name)
            .ok_or_else(|| RelationError::UnknownRelation(name.to_string()))
    }

    pub fn lhs(self) -> MeasureId {
        match self {
            Relation::RelJVsTriangular | Relation::RelJVsJ | Relation::RelJVsJs => MeasureId::RelJ,
            Relation::RelJsVsTriangular | Relation::RelJsVsJ | Relation::RelJsVsJs => {
                MeasureId::RelJs
            }
            _ => MeasureId::RelAg,
        }
    }

    pub fn rhs(self) -> MeasureId {
        match self {
            Relation::RelJVsTriangular
            | Relation::RelJsVsTriangular
            | Relation::RelAgVsTriangular => MeasureId::Triangular,
            Relation::RelJVsJ | Relation::RelJsVsJ | Relation::RelAgVsJ => MeasureId::JDivergence,
            Relation::RelJVsJs | Relation::RelJsVsJs | Relation::RelAgVsJs => {
                MeasureId::JensenShannon
            }
            Relation::RelAgVsAg => MeasureId::ArithmeticGeometric,
        }
    }

    /// The curvature ratio `lhs.f''(x) / rhs.f''(x)` in closed form.
    pub fn ratio(self, x: f64) -> f64 {
        match self {
            Relation::RelJVsTriangular => (x + 1.0) * (x + 3.0) / 8.0,
            Relation::RelJVsJ => {
                let s = x + 1.0;
                x * x * (x + 3.0) / (s * s * s)
            }
            Relation::RelJVsJs => 2.0 * x * (x + 3.0) / (x + 1.0),
            Relation::RelJsVsTriangular => (x + 1.0) / (8.0 * x),
            Relation::RelJsVsJ => {
                let s = x + 1.0;
                x / (s * s * s)
            }
            Relation::RelJsVsJs => 2.0 / (x + 1.0),
            Relation::RelAgVsTriangular => {
                let s = x + 1.0;
                s * s / (16.0 * x * x)
            }
            Relation::RelAgVsJ => {
                let s = x + 1.0;
                0.5 / (s * s)
            }
            Relation::RelAgVsJs => 1.0 / x,
            Relation::RelAgVsAg => 2.0 / (1.0 + x * x),
        }
    }

    fn shape(self) -> Shape {
        match self {
            Relation::RelJVsTriangular | Relation::RelJVsJ | Relation::RelJVsJs => {
                Shape::Increasing
            }
            Relation::RelJsVsJ => Shape::PeakAt(0.5),
            _ => Shape::Decreasing,
        }
    }

    /// Analytic extrema of the curvature ratio over [r, R].
    ///
    /// Monotone ratios take their extremes at the endpoints. The unimodal
    /// f-j ratio x/(x+1)³ peaks at x = 1/2, so its supremum is 4/27 whenever
    /// the interval covers 1/2; restricting to [r, R] only sharpens the
    /// looser global statement 0 ≤ lhs ≤ (4/27)·rhs.
    pub fn coefficients(self, r: f64, big_r: f64) -> Result<RatioExtrema, RelationError> {
        if !r.is_finite() || !big_r.is_finite() || r <= 0.0 || r > 1.0 || big_r < 1.0 {
            return Err(RelationError::BadInterval { r, big_r });
        }
        let g = |x: f64| self.ratio(x);
        let (lower, upper) = match self.shape() {
            Shape::Increasing => (g(r), g(big_r)),
            Shape::Decreasing => (g(big_r), g(r)),
            Shape::PeakAt(peak) => {
                let lower = g(r).min(g(big_r));
                let upper = if r <= peak && peak <= big_r {
                    g(peak)
                } else {
                    g(r).max(g(big_r))
                };
                (lower, upper)
            }
        };
        Ok(RatioExtrema { lower, upper })
    }
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of checking one relation on one pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationReport {
    pub relation: Relation,
    pub coefficients: RatioExtrema,
    pub lhs: f64,
    pub rhs: f64,
    pub pass: bool,
}

/// Verify `m·rhs - slack ≤ lhs ≤ M·rhs + slack` on a pair, with slack
/// `1e-9·max(1, M·rhs)` and (m, M) from the pair's own ratio extremes.
pub fn verify_relation(relation: Relation, pair: &DistributionPair) -> RelationReport {
    // Clamping the interval to contain 1 only ever loosens the coefficients;
    // it guards against inputs normalized right at the validation tolerance.
    let r = pair.ratio_min().min(1.0);
    let big_r = pair.ratio_max().max(1.0);
    let coefficients = relation
        .coefficients(r, big_r)
        .expect("clamped interval is valid");
    let lhs = catalog::evaluate(relation.lhs(), pair);
    let rhs = catalog::evaluate(relation.rhs(), pair);
    let slack = 1e-9 * (coefficients.upper * rhs).abs().max(1.0);
    let pass = coefficients.lower * rhs - slack <= lhs && lhs <= coefficients.upper * rhs + slack;
    RelationReport {
        relation,
        coefficients,
        lhs,
        rhs,
        pass,
    }
}

/// Agreement between the analytic coefficients and the numeric extrema
/// engine on one interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossCheck {
    pub relation: Relation,
    pub analytic: RatioExtrema,
    pub numeric: RatioExtrema,
    pub pass: bool,
}

/// Compare [`Relation::coefficients`] against [`ratio_extrema`] on [r, R],
/// componentwise within `1e-8·max(1, M)`.
pub fn cross_check(relation: Relation, r: f64, big_r: f64) -> Result<CrossCheck, RelationError> {
    let analytic = relation.coefficients(r, big_r)?;
    let gen_lhs = catalog::generator(relation.lhs()).expect("relation lhs has a generator");
    let gen_rhs = catalog::generator(relation.rhs()).expect("relation rhs has a generator");
    let numeric = ratio_extrema(&gen_lhs, &gen_rhs, r, big_r);
    let tol = 1e-8 * analytic.upper.abs().max(1.0);
    let pass = (analytic.lower - numeric.lower).abs() <= tol
        && (analytic.upper - numeric.upper).abs() <= tol;
    Ok(CrossCheck {
        relation,
        analytic,
        numeric,
        pass,
    })
}

/// The classical inequality chains among the symmetric measures, as slacked
/// checks (scale: the larger side of each link):
///
/// ```text
/// h/2 ≤ Δ/4 ≤ h ≤ Ψ/16        Δ ≤ J/2 ≤ Ψ/4        Δ/4 ≤ I ≤ (ln2/2)·Δ
/// Δ/4 ≤ I ≤ h ≤ J/8 ≤ T ≤ Ψ/16
/// ```
pub fn known_chains(pair: &DistributionPair) -> Vec<Check> {
    let h = catalog::evaluate(MeasureId::Hellinger, pair);
    let delta = catalog::evaluate(MeasureId::Triangular, pair);
    let psi = catalog::evaluate(MeasureId::SymChiSquare, pair);
    let j = catalog::evaluate(MeasureId::JDivergence, pair);
    let i = catalog::evaluate(MeasureId::JensenShannon, pair);
    let t = catalog::evaluate(MeasureId::ArithmeticGeometric, pair);
    let ln2 = std::f64::consts::LN_2;

    let link =
        |name: &str, lhs: f64, rhs: f64| Check::leq(name, lhs, rhs, lhs.abs().max(rhs.abs()));
    vec![
        link("chain.half_h_le_quarter_delta", 0.5 * h, 0.25 * delta),
        link("chain.quarter_delta_le_h", 0.25 * delta, h),
        link("chain.h_le_sixteenth_psi", h, psi / 16.0),
        link("chain.delta_le_half_j", delta, 0.5 * j),
        link("chain.half_j_le_quarter_psi", 0.5 * j, 0.25 * psi),
        link("chain.quarter_delta_le_js", 0.25 * delta, i),
        link("chain.js_le_half_ln2_delta", i, 0.5 * ln2 * delta),
        link("chain.js_le_hellinger", i, h),
        link("chain.hellinger_le_eighth_j", h, j / 8.0),
        link("chain.eighth_j_le_ag", j / 8.0, t),
        link("chain.ag_le_sixteenth_psi", t, psi / 16.0),
    ]
}

/// Per-pair ratio certificates. Each statistic is a quotient of divergences
/// that the sandwich relations force into [r, R].
///
/// The labels mirror their reference numbering: the zeta family skips
/// index 2, and the second of the two entries published under xi_2 is
/// stored as `xi3` (see ERRATA.md).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioCertificate {
    /// Δ / (8F - Δ)
    pub zeta1: f64,
    /// (2I - F) / F
    pub zeta3: f64,
    /// √Δ / (4√G - √Δ)
    pub xi1: f64,
    /// (√J - √(2G)) / √(2G)
    pub xi2: f64,
    /// I / G
    pub xi3: f64,
    /// √(2T - G) / √G
    pub xi4: f64,
}

impl RatioCertificate {
    pub fn entries(&self) -> [(&'static str, f64); 6] {
        [
            ("zeta1", self.zeta1),
            ("zeta3", self.zeta3),
            ("xi1", self.xi1),
            ("xi2", self.xi2),
            ("xi3", self.xi3),
            ("xi4", self.xi4),
        ]
    }
}

/// Compute all six certificates for a non-degenerate pair.
///
/// `2T - G` equals the reversed relative arithmetic-geometric divergence, so
/// it is nonnegative in exact arithmetic; a roundoff-sized negative value
/// (within -1e-12) is clamped to zero, anything more negative is an error.
pub fn certificates(pair: &DistributionPair) -> Result<RatioCertificate, RelationError> {
    let p = pair.p().probs();
    let q = pair.q().probs();
    if p == q {
        return Err(RelationError::DegeneratePair);
    }
    let f = catalog::evaluate(MeasureId::RelJs, pair);
    let g = catalog::evaluate(MeasureId::RelAg, pair);
    let delta = catalog::evaluate(MeasureId::Triangular, pair);
    let j = catalog::evaluate(MeasureId::JDivergence, pair);
    let i = catalog::evaluate(MeasureId::JensenShannon, pair);
    let t = catalog::evaluate(MeasureId::ArithmeticGeometric, pair);
    if f <= 0.0 || g <= 0.0 || delta <= 0.0 {
        return Err(RelationError::DegeneratePair);
    }
    let radicand = 2.0 * t - g;
    let radicand = if radicand < 0.0 {
        if radicand < -1e-12 {
            return Err(RelationError::NegativeRadicand(radicand));
        }
        0.0
    } else {
        radicand
    };
    Ok(RatioCertificate {
        zeta1: delta / (8.0 * f - delta),
        zeta3: (2.0 * i - f) / f,
        xi1: delta.sqrt() / (4.0 * g.sqrt() - delta.sqrt()),
        xi2: (j.sqrt() - (2.0 * g).sqrt()) / (2.0 * g).sqrt(),
        xi3: i / g,
        xi4: radicand.sqrt() / g.sqrt(),
    })
}
