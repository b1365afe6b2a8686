//! The named measures: closed-form evaluation, convex generators, reference
//! bound expressions, and the identity suite tying the family together.
//!
//! Thirteen measures are exposed. Five are non-symmetric (chi-square,
//! Kullback-Leibler, and the three "relative" measures), eight are symmetric.
//! Bhattacharyya and the harmonic-mean overlap are similarities in (0, 1],
//! not divergences, and carry no generator; every other measure is a Csiszár
//! f-divergence whose generator is available through [`generator`].
//!
//! Natural logarithms throughout.

use thiserror::Error;

use crate::fdiv::{log_mean_inverse, DragomirBounds, Generator};
use crate::simplex::{Distribution, DistributionPair, SimplexError};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("'{0}' has no convex generator (it is a similarity, not a divergence)")]
    NoGenerator(MeasureId),

    #[error("'{0}' has no closed-form bound expressions")]
    NoClosedForm(MeasureId),

    #[error("unknown measure name '{0}'")]
    UnknownMeasure(String),
}

/// Identifies one of the thirteen catalog measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MeasureId {
    /// Pearson chi-square: Σ (p-q)²/q.
    ChiSquare,
    /// Kullback-Leibler relative information: Σ p ln(p/q).
    Kl,
    /// Relative J-divergence: Σ (p-q) ln((p+q)/(2q)).
    RelJ,
    /// Relative Jensen-Shannon divergence: Σ p ln(2p/(p+q)).
    RelJs,
    /// Relative arithmetic-geometric divergence: Σ ((p+q)/2) ln((p+q)/(2p)).
    RelAg,
    /// Hellinger discrimination: ½ Σ (√p - √q)².
    Hellinger,
    /// Bhattacharyya overlap Σ √(pq), a similarity in (0, 1].
    Bhattacharyya,
    /// Triangular discrimination: Σ (p-q)²/(p+q).
    Triangular,
    /// Harmonic-mean overlap Σ 2pq/(p+q), a similarity in (0, 1].
    HarmonicMean,
    /// Symmetric chi-square: Σ (p-q)²(p+q)/(pq).
    SymChiSquare,
    /// J-divergence (symmetrized KL): Σ (p-q) ln(p/q).
    JDivergence,
    /// Jensen-Shannon divergence: ½[F(P‖Q) + F(Q‖P)] with F = RelJs.
    JensenShannon,
    /// Arithmetic-geometric divergence: Σ ((p+q)/2) ln((p+q)/(2√(pq))).
    ArithmeticGeometric,
}

impl MeasureId {
    pub const ALL: [MeasureId; 13] = [
        MeasureId::ChiSquare,
        MeasureId::Kl,
        MeasureId::RelJ,
        MeasureId::RelJs,
        MeasureId::RelAg,
        MeasureId::Hellinger,
        MeasureId::Bhattacharyya,
        MeasureId::Triangular,
        MeasureId::HarmonicMean,
        MeasureId::SymChiSquare,
        MeasureId::JDivergence,
        MeasureId::JensenShannon,
        MeasureId::ArithmeticGeometric,
    ];

    /// Stable identifier used by the CLI, report keys, and check names.
    pub fn name(self) -> &'static str {
        match self {
            MeasureId::ChiSquare => "chi2",
            MeasureId::Kl => "kl",
            MeasureId::RelJ => "rel_j",
            MeasureId::RelJs => "rel_js",
            MeasureId::RelAg => "rel_ag",
            MeasureId::Hellinger => "hellinger",
            MeasureId::Bhattacharyya => "bhattacharyya",
            MeasureId::Triangular => "triangular",
            MeasureId::HarmonicMean => "harmonic",
            MeasureId::SymChiSquare => "sym_chi2",
            MeasureId::JDivergence => "j",
            MeasureId::JensenShannon => "js",
            MeasureId::ArithmeticGeometric => "ag",
        }
    }

    pub fn from_name(name: &str) -> Result<Self, CatalogError> {
        MeasureId::ALL
            .iter()
            .copied()
            .find(|m| m.name() == name)
            .ok_or_else(|| CatalogError::UnknownMeasure(name.to_string()))
    }

    /// Whether evaluate(m, (P,Q)) = evaluate(m, (Q,P)).
    pub fn is_symmetric(self) -> bool {
        matches!(
            self,
            MeasureId::Hellinger
                | MeasureId::Bhattacharyya
                | MeasureId::Triangular
                | MeasureId::HarmonicMean
                | MeasureId::SymChiSquare
                | MeasureId::JDivergence
                | MeasureId::JensenShannon
                | MeasureId::ArithmeticGeometric
        )
    }

    /// Similarities take the value 1 (not 0) on identical pairs and have no
    /// convex normalized generator.
    pub fn is_similarity(self) -> bool {
        matches!(self, MeasureId::Bhattacharyya | MeasureId::HarmonicMean)
    }

    pub fn has_generator(self) -> bool {
        !self.is_similarity()
    }

    /// The seven measures with transcribed closed-form E/A/B expressions.
    pub fn has_closed_bounds(self) -> bool {
        matches!(
            self,
            MeasureId::RelJ
                | MeasureId::RelJs
                | MeasureId::RelAg
                | MeasureId::Triangular
                | MeasureId::JDivergence
                | MeasureId::JensenShannon
                | MeasureId::ArithmeticGeometric
        )
    }
}

impl std::fmt::Display for MeasureId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

// Slice-level sums. `evaluate` and the identity suite are built on these so
// that derived arguments like the midpoint distribution need no revalidation.

pub(crate) fn chi_square(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(&pi, &qi)| (pi - qi) * (pi - qi) / qi)
        .sum()
}

pub(crate) fn kl(p: &[f64], q: &[f64]) -> f64 {
    p.iter().zip(q).map(|(&pi, &qi)| pi * (pi / qi).ln()).sum()
}

pub(crate) fn rel_j(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(&pi, &qi)| (pi - qi) * ((pi + qi) / (2.0 * qi)).ln())
        .sum()
}

pub(crate) fn rel_js(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(&pi, &qi)| pi * (2.0 * pi / (pi + qi)).ln())
        .sum()
}

pub(crate) fn rel_ag(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(&pi, &qi)| 0.5 * (pi + qi) * ((pi + qi) / (2.0 * pi)).ln())
        .sum()
}

fn hellinger(p: &[f64], q: &[f64]) -> f64 {
    0.5 * p
        .iter()
        .zip(q)
        .map(|(&pi, &qi)| {
            let d = pi.sqrt() - qi.sqrt();
            d * d
        })
        .sum::<f64>()
}

fn bhattacharyya(p: &[f64], q: &[f64]) -> f64 {
    p.iter().zip(q).map(|(&pi, &qi)| (pi * qi).sqrt()).sum()
}

pub(crate) fn triangular(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(&pi, &qi)| (pi - qi) * (pi - qi) / (pi + qi))
        .sum()
}

fn harmonic_mean(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(&pi, &qi)| 2.0 * pi * qi / (pi + qi))
        .sum()
}

pub(crate) fn sym_chi_square(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(&pi, &qi)| (pi - qi) * (pi - qi) * (pi + qi) / (pi * qi))
        .sum()
}

pub(crate) fn j_divergence(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(&pi, &qi)| (pi - qi) * (pi / qi).ln())
        .sum()
}

pub(crate) fn jensen_shannon(p: &[f64], q: &[f64]) -> f64 {
    0.5 * (rel_js(p, q) + rel_js(q, p))
}

pub(crate) fn arithmetic_geometric(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(&pi, &qi)| 0.5 * (pi + qi) * ((pi + qi) / (2.0 * (pi * qi).sqrt())).ln())
        .sum()
}

pub(crate) fn eval_slices(measure: MeasureId, p: &[f64], q: &[f64]) -> f64 {
    match measure {
        MeasureId::ChiSquare => chi_square(p, q),
        MeasureId::Kl => kl(p, q),
        MeasureId::RelJ => rel_j(p, q),
        MeasureId::RelJs => rel_js(p, q),
        MeasureId::RelAg => rel_ag(p, q),
        MeasureId::Hellinger => hellinger(p, q),
        MeasureId::Bhattacharyya => bhattacharyya(p, q),
        MeasureId::Triangular => triangular(p, q),
        MeasureId::HarmonicMean => harmonic_mean(p, q),
        MeasureId::SymChiSquare => sym_chi_square(p, q),
        MeasureId::JDivergence => j_divergence(p, q),
        MeasureId::JensenShannon => jensen_shannon(p, q),
        MeasureId::ArithmeticGeometric => arithmetic_geometric(p, q),
    }
}

/// Evaluate a measure on a pair by direct summation of its closed form.
pub fn evaluate(measure: MeasureId, pair: &DistributionPair) -> f64 {
    eval_slices(measure, pair.p().probs(), pair.q().probs())
}

// Generator functions. The first derivatives for rel_js and rel_ag fix the
// sign errors in their commonly transcribed forms; see ERRATA.md. All are
// validated against finite differences by the test suite.

fn chi2_f(x: f64) -> f64 {
    (x - 1.0) * (x - 1.0)
}
fn chi2_df(x: f64) -> f64 {
    2.0 * (x - 1.0)
}
fn chi2_d2f(_x: f64) -> f64 {
    2.0
}

fn kl_f(x: f64) -> f64 {
    x * x.ln()
}
fn kl_df(x: f64) -> f64 {
    1.0 + x.ln()
}
fn kl_d2f(x: f64) -> f64 {
    1.0 / x
}

fn rel_j_f(x: f64) -> f64 {
    (x - 1.0) * (0.5 * (x + 1.0)).ln()
}
fn rel_j_df(x: f64) -> f64 {
    (x - 1.0) / (x + 1.0) + (0.5 * (x + 1.0)).ln()
}
fn rel_j_d2f(x: f64) -> f64 {
    (x + 3.0) / ((x + 1.0) * (x + 1.0))
}

fn rel_js_f(x: f64) -> f64 {
    x * (2.0 * x / (x + 1.0)).ln() - 0.5 * (x - 1.0)
}
fn rel_js_df(x: f64) -> f64 {
    (2.0 * x / (x + 1.0)).ln() - 0.5 * (x - 1.0) / (x + 1.0)
}
fn rel_js_d2f(x: f64) -> f64 {
    1.0 / (x * (x + 1.0) * (x + 1.0))
}

fn rel_ag_f(x: f64) -> f64 {
    0.5 * (x + 1.0) * ((x + 1.0) / (2.0 * x)).ln() + 0.5 * (x - 1.0)
}
fn rel_ag_df(x: f64) -> f64 {
    0.5 * (((x + 1.0) / (2.0 * x)).ln() + (x - 1.0) / x)
}
fn rel_ag_d2f(x: f64) -> f64 {
    1.0 / (2.0 * x * x * (x + 1.0))
}

fn hellinger_f(x: f64) -> f64 {
    let d = x.sqrt() - 1.0;
    0.5 * d * d
}
fn hellinger_df(x: f64) -> f64 {
    0.5 * (1.0 - 1.0 / x.sqrt())
}
fn hellinger_d2f(x: f64) -> f64 {
    0.25 / (x * x.sqrt())
}

fn triangular_f(x: f64) -> f64 {
    (x - 1.0) * (x - 1.0) / (x + 1.0)
}
fn triangular_df(x: f64) -> f64 {
    (x - 1.0) * (x + 3.0) / ((x + 1.0) * (x + 1.0))
}
fn triangular_d2f(x: f64) -> f64 {
    let s = x + 1.0;
    8.0 / (s * s * s)
}

fn sym_chi2_f(x: f64) -> f64 {
    (x - 1.0) * (x - 1.0) * (x + 1.0) / x
}
fn sym_chi2_df(x: f64) -> f64 {
    2.0 * x - 1.0 - 1.0 / (x * x)
}
fn sym_chi2_d2f(x: f64) -> f64 {
    2.0 + 2.0 / (x * x * x)
}

fn j_f(x: f64) -> f64 {
    (x - 1.0) * x.ln()
}
fn j_df(x: f64) -> f64 {
    1.0 - 1.0 / x + x.ln()
}
fn j_d2f(x: f64) -> f64 {
    (x + 1.0) / (x * x)
}

fn js_f(x: f64) -> f64 {
    0.5 * x * x.ln() + 0.5 * (x + 1.0) * (2.0 / (x + 1.0)).ln()
}
fn js_df(x: f64) -> f64 {
    0.5 * (2.0 * x / (x + 1.0)).ln()
}
fn js_d2f(x: f64) -> f64 {
    0.5 / (x * (x + 1.0))
}

fn ag_f(x: f64) -> f64 {
    0.5 * (x + 1.0) * (0.5 * (x + 1.0) / x.sqrt()).ln()
}
fn ag_df(x: f64) -> f64 {
    0.25 * (1.0 - 1.0 / x + 2.0 * (0.5 * (x + 1.0) / x.sqrt()).ln())
}
fn ag_d2f(x: f64) -> f64 {
    0.25 * (1.0 + x * x) / (x * x * (1.0 + x))
}

/// The convex normalized generator whose Csiszár sum reproduces `measure`.
///
/// The two similarities have none.
pub fn generator(measure: MeasureId) -> Result<Generator, CatalogError> {
    let gen = match measure {
        MeasureId::ChiSquare => Generator::from_parts("chi2", chi2_f, chi2_df, chi2_d2f),
        MeasureId::Kl => Generator::from_parts("kl", kl_f, kl_df, kl_d2f),
        MeasureId::RelJ => Generator::from_parts("rel_j", rel_j_f, rel_j_df, rel_j_d2f),
        MeasureId::RelJs => Generator::from_parts("rel_js", rel_js_f, rel_js_df, rel_js_d2f),
        MeasureId::RelAg => Generator::from_parts("rel_ag", rel_ag_f, rel_ag_df, rel_ag_d2f),
        MeasureId::Hellinger => {
            Generator::from_parts("hellinger", hellinger_f, hellinger_df, hellinger_d2f)
        }
        MeasureId::Triangular => {
            Generator::from_parts("triangular", triangular_f, triangular_df, triangular_d2f)
        }
        MeasureId::SymChiSquare => {
            Generator::from_parts("sym_chi2", sym_chi2_f, sym_chi2_df, sym_chi2_d2f)
        }
        MeasureId::JDivergence => Generator::from_parts("j", j_f, j_df, j_d2f),
        MeasureId::JensenShannon => Generator::from_parts("js", js_f, js_df, js_d2f),
        MeasureId::ArithmeticGeometric => Generator::from_parts("ag", ag_f, ag_df, ag_d2f),
        MeasureId::Bhattacharyya | MeasureId::HarmonicMean => {
            return Err(CatalogError::NoGenerator(measure))
        }
    };
    Ok(gen)
}

/// Closed-form E/A/B expressions for the seven measures that have them,
/// assembled from the pair's cached ratio extremes.
///
/// These are the transcribed reference expressions, with two corrections
/// documented in ERRATA.md (the Jensen-Shannon B component and the
/// arithmetic-geometric A component); as shipped they agree with the generic
/// constructions in [`crate::fdiv`] to relative 1e-8. `b` is absent when
/// r = R.
pub fn closed_bounds(
    measure: MeasureId,
    pair: &DistributionPair,
) -> Result<DragomirBounds, CatalogError> {
    if !measure.has_closed_bounds() {
        return Err(CatalogError::NoClosedForm(measure));
    }
    let (p, q) = (pair.p().probs(), pair.q().probs());
    let (r, big_r) = (pair.ratio_min(), pair.ratio_max());
    let lm =
        |a: f64, b: f64| log_mean_inverse(a, b).expect("arguments derived from positive ratios");
    let value = eval_slices(measure, p, q);
    let (e, a) = match measure {
        MeasureId::RelJ => {
            let e = rel_j(p, q) + triangular(p, q);
            let a = 0.25
                * (big_r - r)
                * (big_r - r)
                * (2.0 / ((big_r + 1.0) * (r + 1.0)) + lm(r + 1.0, big_r + 1.0));
            (e, a)
        }
        MeasureId::RelJs => {
            let e = rel_j(q, p) - 0.5 * triangular(p, q);
            let a = 0.25 * (big_r - r) * (big_r - r) / ((big_r + 1.0) * (r + 1.0))
                * (lm(r / (r + 1.0), big_r / (big_r + 1.0)) - 1.0);
            (e, a)
        }
        MeasureId::RelAg => {
            let e = 0.5 * (chi_square(q, p) - rel_j(q, p));
            let a = (big_r - r) * (big_r - r) / (8.0 * r * big_r)
                * (1.0 - lm((r + 1.0) / r, (big_r + 1.0) / big_r));
            (e, a)
        }
        MeasureId::Triangular => {
            let e = p
                .iter()
                .zip(q)
                .map(|(&pi, &qi)| {
                    let t = (pi - qi) / (pi + qi);
                    t * t * (pi + 3.0 * qi)
                })
                .sum();
            let a = (big_r - r) * (big_r - r) * (big_r + r + 2.0)
                / ((big_r + 1.0) * (big_r + 1.0) * (r + 1.0) * (r + 1.0));
            (e, a)
        }
        MeasureId::JDivergence => {
            let e = j_divergence(p, q) + chi_square(q, p);
            let a = 0.25 * (big_r - r) * (big_r - r) * (1.0 / (r * big_r) + lm(r, big_r));
            (e, a)
        }
        MeasureId::JensenShannon => {
            let e = 0.5 * rel_j(q, p);
            let a = 0.125 * (big_r - r) * (big_r - r) / ((big_r + 1.0) * (r + 1.0))
                * lm(r / (r + 1.0), big_r / (big_r + 1.0));
            (e, a)
        }
        MeasureId::ArithmeticGeometric => {
            let e = 0.25 * chi_square(q, p)
                + 0.5
                    * p.iter()
                        .zip(q)
                        .map(|(&pi, &qi)| (pi - qi) * (0.5 * (pi + qi) / (pi * qi).sqrt()).ln())
                        .sum::<f64>();
            // The middle logarithmic-mean term carries a factor 2 (ERRATA.md).
            let a = (big_r - r) * (big_r - r) / 16.0
                * (1.0 / (r * big_r) + 2.0 * lm(r + 1.0, big_r + 1.0) - lm(r, big_r));
            (e, a)
        }
        _ => unreachable!("guarded by has_closed_bounds"),
    };
    let b = if r == big_r {
        None
    } else {
        Some(match measure {
            MeasureId::RelJ => (big_r - 1.0) * (1.0 - r) * lm(r + 1.0, big_r + 1.0),
            MeasureId::RelJs => {
                (big_r * (2.0 * big_r / (big_r + 1.0)).ln() - r * (2.0 * r / (r + 1.0)).ln())
                    / (big_r - r)
                    - r * big_r / ((big_r + 1.0) * (r + 1.0))
                        * lm(r / (r + 1.0), big_r / (big_r + 1.0))
            }
            MeasureId::RelAg => {
                0.5 * ((r + 1.0) * (big_r + 1.0) / (4.0 * r * big_r)).ln()
                    - (1.0 - r * big_r) / (2.0 * r * big_r)
                        * lm((r + 1.0) / r, (big_r + 1.0) / big_r)
            }
            MeasureId::Triangular => 2.0 * (big_r - 1.0) * (1.0 - r) / ((big_r + 1.0) * (1.0 + r)),
            MeasureId::JDivergence => (big_r - 1.0) * (1.0 - r) * lm(r, big_r),
            // Both chord weights enter with a plus sign (ERRATA.md).
            MeasureId::JensenShannon => {
                ((big_r - 1.0) * (r * r.ln() + (r + 1.0) * (2.0 / (r + 1.0)).ln())
                    + (1.0 - r) * (big_r * big_r.ln() + (big_r + 1.0) * (2.0 / (big_r + 1.0)).ln()))
                    / (2.0 * (big_r - r))
            }
            MeasureId::ArithmeticGeometric => {
                ((big_r - 1.0) * (r + 1.0) * (0.5 * (r + 1.0) / r.sqrt()).ln()
                    + (1.0 - r) * (big_r + 1.0) * (0.5 * (big_r + 1.0) / big_r.sqrt()).ln())
                    / (2.0 * (big_r - r))
            }
            _ => unreachable!("guarded by has_closed_bounds"),
        })
    };
    Ok(DragomirBounds { value, e, a, b })
}

/// One two-sided identity with its residual and tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityResidual {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
}

impl IdentityResidual {
    pub fn residual(&self) -> f64 {
        (self.lhs - self.rhs).abs()
    }

    pub fn tolerance(&self) -> f64 {
        1e-12 * self.lhs.abs().max(1.0)
    }

    pub fn holds(&self) -> bool {
        self.residual() <= self.tolerance()
    }
}

/// Evaluate both sides of every identity relating the catalog measures,
/// including the six representations through KL against the midpoint
/// distribution M = (P+Q)/2.
///
/// The splits of the relative J-divergence (`rel_j_mid_kl` and
/// `rel_j_swap_split`) carry coefficient 2; see ERRATA.md for the evidence.
pub fn identities(pair: &DistributionPair) -> Vec<IdentityResidual> {
    let p = pair.p().probs();
    let q = pair.q().probs();
    let m: Vec<f64> = p.iter().zip(q).map(|(&a, &b)| 0.5 * (a + b)).collect();
    let m = &m[..];

    let id = |name, lhs, rhs| IdentityResidual { name, lhs, rhs };
    vec![
        id("j_kl_sum", j_divergence(p, q), kl(p, q) + kl(q, p)),
        id("j_rel_j_sum", j_divergence(p, q), rel_j(p, q) + rel_j(q, p)),
        id(
            "hellinger_bhattacharyya",
            hellinger(p, q),
            1.0 - bhattacharyya(p, q),
        ),
        id(
            "triangular_harmonic",
            triangular(p, q),
            2.0 * (1.0 - harmonic_mean(p, q)),
        ),
        id(
            "sym_chi2_sum",
            sym_chi_square(p, q),
            chi_square(p, q) + chi_square(q, p),
        ),
        id(
            "js_half_sum",
            jensen_shannon(p, q),
            0.5 * (rel_js(p, q) + rel_js(q, p)),
        ),
        id(
            "ag_half_sum",
            arithmetic_geometric(p, q),
            0.5 * (rel_ag(p, q) + rel_ag(q, p)),
        ),
        id(
            "j_four_js_ag",
            j_divergence(p, q),
            4.0 * (jensen_shannon(p, q) + arithmetic_geometric(p, q)),
        ),
        id(
            "js_mid_kl",
            jensen_shannon(p, q),
            0.5 * (kl(p, m) + kl(q, m)),
        ),
        id(
            "ag_mid_kl",
            arithmetic_geometric(p, q),
            0.5 * (kl(m, p) + kl(m, q)),
        ),
        id("rel_j_mid_kl", rel_j(p, q), 2.0 * (kl(q, m) + kl(m, q))),
        id("rel_js_mid_kl", rel_js(p, q), kl(p, m)),
        id("rel_ag_mid_kl", rel_ag(p, q), kl(m, p)),
        id(
            "rel_j_swap_split",
            rel_j(q, p),
            2.0 * (rel_js(p, q) + rel_ag(p, q)),
        ),
    ]
}

/// The KL parallelogram law around the midpoint M = (P+Q)/2:
///
/// ```text
/// K(P‖U) + K(Q‖U) = K(P‖M) + K(Q‖M) + 2 K(M‖U)
/// ```
///
/// Returned as an [`IdentityResidual`] with both sides evaluated.
pub fn parallelogram(
    p: &Distribution,
    q: &Distribution,
    u: &Distribution,
) -> Result<IdentityResidual, SimplexError> {
    if p.len() != q.len() {
        return Err(SimplexError::LengthMismatch(p.len(), q.len()));
    }
    if p.len() != u.len() {
        return Err(SimplexError::LengthMismatch(p.len(), u.len()));
    }
    let m = p.midpoint(q)?;
    let (p, q, u, m) = (p.probs(), q.probs(), u.probs(), m.probs());
    Ok(IdentityResidual {
        name: "parallelogram",
        lhs: kl(p, u) + kl(q, u),
        rhs: kl(p, m) + kl(q, m) + 2.0 * kl(m, u),
    })
}
