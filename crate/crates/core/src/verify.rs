//! The full per-pair check suite and deterministic fuzz campaigns.
//!
//! [`pair_suite`] runs everything the library can certify about one pair:
//! the identity suite, the value/E/A/B chains for every generator-bearing
//! measure, the ten sandwich relations, the classical chains, and the ratio
//! certificates. [`campaign`] drives the same suite over seeded random
//! pairs and aggregates the worst slack margin per check family.
//!
//! Determinism contract: every trial's randomness derives from
//! (base seed, trial index) alone, so campaigns are reproducible and
//! insensitive to scheduling.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::catalog::{self, MeasureId};
use crate::fdiv::dragomir_bounds;
use crate::relations::{self, Relation, RelationError};
use crate::report::{BoundsEntry, Check};
use crate::simplex::{sample_distribution_with, sample_pair_with, Distribution, DistributionPair};

/// Full check suite for one pair. `third` supplies the reference
/// distribution for the parallelogram law; without it that check is skipped.
pub fn pair_suite(pair: &DistributionPair, third: Option<&Distribution>) -> Vec<Check> {
    let mut checks = Vec::with_capacity(128);

    for id in catalog::identities(pair) {
        checks.push(Check::residual(
            format!("identity.{}", id.name),
            id.residual(),
            id.tolerance(),
        ));
    }
    if let Some(u) = third {
        let id =
            catalog::parallelogram(pair.p(), pair.q(), u).expect("suite inputs have equal lengths");
        checks.push(Check::residual(
            "identity.parallelogram",
            id.residual(),
            id.tolerance(),
        ));
    }

    for (name, bounds) in generator_bounds(pair) {
        let scale = bounds.a;
        let mut push = |suffix: &str, lhs: f64, rhs: f64| {
            checks.push(Check::leq(
                format!("bounds.{name}.{suffix}"),
                lhs,
                rhs,
                scale,
            ));
        };
        push("value_nonneg", 0.0, bounds.value);
        push("value_le_e", bounds.value, bounds.e);
        push("e_le_a", bounds.e, bounds.a);
        if let Some(b) = bounds.b {
            push("value_le_b", bounds.value, b);
            push("b_le_a", b, bounds.a);
            push("b_gap_nonneg", 0.0, b - bounds.value);
            push("b_gap_le_a", b - bounds.value, bounds.a);
        }
    }

    for relation in Relation::ALL {
        let rep = relations::verify_relation(relation, pair);
        let scale = rep.coefficients.upper * rep.rhs;
        checks.push(Check::leq(
            format!("relation.{}.lower", relation.name()),
            rep.coefficients.lower * rep.rhs,
            rep.lhs,
            scale,
        ));
        checks.push(Check::leq(
            format!("relation.{}.upper", relation.name()),
            rep.lhs,
            rep.coefficients.upper * rep.rhs,
            scale,
        ));
    }

    checks.extend(relations::known_chains(pair));

    match relations::certificates(pair) {
        Ok(cert) => {
            let scale = pair.ratio_max();
            for (name, value) in cert.entries() {
                checks.push(Check::leq(
                    format!("cert.{name}.lower"),
                    pair.ratio_min(),
                    value,
                    scale,
                ));
                checks.push(Check::leq(
                    format!("cert.{name}.upper"),
                    value,
                    pair.ratio_max(),
                    scale,
                ));
            }
        }
        Err(RelationError::DegeneratePair) => {
            checks.push(Check::skipped("cert.skipped_degenerate"));
        }
        Err(RelationError::NegativeRadicand(v)) => {
            checks.push(Check::residual("cert.xi4_radicand", v.abs(), 1e-12));
        }
        Err(_) => unreachable!("certificates only reports pair degeneracy"),
    }

    checks
}

/// Generic bound bundles for every generator-bearing measure, keyed by name.
pub fn generator_bounds(
    pair: &DistributionPair,
) -> Vec<(&'static str, crate::fdiv::DragomirBounds)> {
    MeasureId::ALL
        .iter()
        .filter(|m| m.has_generator())
        .map(|&m| {
            let gen = catalog::generator(m).expect("measure has a generator");
            (m.name(), dragomir_bounds(&gen, pair))
        })
        .collect()
}

/// Bound bundles in report form.
pub fn bounds_entries(pair: &DistributionPair) -> BTreeMap<String, BoundsEntry> {
    generator_bounds(pair)
        .into_iter()
        .map(|(name, b)| (name.to_string(), b.into()))
        .collect()
}

/// All thirteen measure values, keyed by name.
pub fn measure_entries(pair: &DistributionPair) -> BTreeMap<String, f64> {
    MeasureId::ALL
        .iter()
        .map(|&m| (m.name().to_string(), catalog::evaluate(m, pair)))
        .collect()
}

#[derive(Debug, Error)]
pub enum FuzzError {
    #[error("trials must be at least 1")]
    NoTrials,

    #[error("dimension range must satisfy 2 <= lo <= hi, got {lo}..{hi}")]
    BadDims { lo: usize, hi: usize },

    #[error("floor must satisfy 0 < floor < 1/hi, got {floor} with hi = {hi}")]
    BadFloor { floor: f64, hi: usize },
}

/// Parameters of a fuzz campaign. Dimensions are drawn uniformly from
/// `dim_lo..=dim_hi` per trial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzConfig {
    pub trials: u64,
    pub dim_lo: usize,
    pub dim_hi: usize,
    pub seed: u64,
    pub floor: f64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            trials: 10_000,
            dim_lo: 2,
            dim_hi: 50,
            seed: 42,
            floor: 1e-6,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<(), FuzzError> {
        if self.trials == 0 {
            return Err(FuzzError::NoTrials);
        }
        if self.dim_lo < 2 || self.dim_lo > self.dim_hi {
            return Err(FuzzError::BadDims {
                lo: self.dim_lo,
                hi: self.dim_hi,
            });
        }
        if !self.floor.is_finite() || self.floor <= 0.0 || self.floor >= 1.0 / self.dim_hi as f64 {
            return Err(FuzzError::BadFloor {
                floor: self.floor,
                hi: self.dim_hi,
            });
        }
        Ok(())
    }
}

/// Mix a base seed and a trial index into an independent per-trial seed
/// (splitmix64 finalizer).
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The pair and parallelogram reference for one trial. Depends only on
/// (config, index).
pub fn trial(config: &FuzzConfig, index: u64) -> (DistributionPair, Distribution) {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(config.seed, index));
    let n = rng.gen_range(config.dim_lo..=config.dim_hi);
    let pair = sample_pair_with(&mut rng, n, config.floor).expect("config validated");
    let third = sample_distribution_with(&mut rng, n, config.floor).expect("config validated");
    (pair, third)
}

/// Run the suite over the whole campaign and fold the result into one check
/// per family: `lhs` is the worst excess seen (negative margins pass),
/// `rhs` is 0.
pub fn campaign(config: &FuzzConfig) -> Result<Vec<Check>, FuzzError> {
    config.validate()?;
    let mut worst: BTreeMap<String, f64> = BTreeMap::new();
    for index in 0..config.trials {
        let (pair, third) = trial(config, index);
        for check in pair_suite(&pair, Some(&third)) {
            let excess = check.excess();
            let entry = worst.entry(check.name).or_insert(f64::NEG_INFINITY);
            *entry = entry.max(excess);
        }
    }
    Ok(worst
        .into_iter()
        .map(|(name, excess)| Check {
            name,
            lhs: excess,
            rhs: 0.0,
            pass: excess <= 0.0,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_point_pair() {
        let p = Distribution::validate(&[0.5, 0.5], false).unwrap();
        let q = Distribution::validate(&[0.25, 0.75], false).unwrap();
        let u = Distribution::uniform(2).unwrap();
        let pair = DistributionPair::new(p, q).unwrap();
        let checks = pair_suite(&pair, Some(&u));
        assert!(checks.len() > 100);
        for c in &checks {
            assert!(c.pass, "{}: lhs {} rhs {}", c.name, c.lhs, c.rhs);
        }
    }

    #[test]
    fn suite_marks_degenerate_certificates_as_skipped() {
        let p = Distribution::validate(&[0.5, 0.5], false).unwrap();
        let pair = DistributionPair::new(p.clone(), p).unwrap();
        let checks = pair_suite(&pair, None);
        assert!(checks.iter().all(|c| c.pass));
        assert!(checks.iter().any(|c| c.name == "cert.skipped_degenerate"));
        assert!(!checks.iter().any(|c| c.name == "identity.parallelogram"));
    }

    #[test]
    fn trials_are_deterministic_and_index_sensitive() {
        let config = FuzzConfig {
            trials: 10,
            dim_lo: 2,
            dim_hi: 12,
            seed: 9,
            floor: 1e-6,
        };
        let (a1, u1) = trial(&config, 3);
        let (a2, u2) = trial(&config, 3);
        assert_eq!(a1, a2);
        assert_eq!(u1, u2);
        let (b, _) = trial(&config, 4);
        assert_ne!(a1, b);
    }

    #[test]
    fn campaign_aggregates_and_passes() {
        let config = FuzzConfig {
            trials: 50,
            dim_lo: 2,
            dim_hi: 10,
            seed: 42,
            floor: 1e-6,
        };
        let checks = campaign(&config).unwrap();
        assert!(checks.iter().all(|c| c.pass));
        // One aggregate entry per family, sorted by name.
        let names: Vec<_> = checks.iter().map(|c| c.name.clone()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert!(names.iter().any(|n| n == "identity.parallelogram"));
        assert!(names.iter().any(|n| n == "relation.f-j.upper"));
        // Margins are strictly negative, not merely zero.
        for c in &checks {
            assert!(c.excess() < 0.0, "{} margin degenerate", c.name);
        }
    }

    #[test]
    fn campaign_rejects_bad_configs() {
        let config = FuzzConfig {
            trials: 0,
            ..FuzzConfig::default()
        };
        assert!(matches!(campaign(&config), Err(FuzzError::NoTrials)));

        let config = FuzzConfig {
            dim_lo: 1,
            ..FuzzConfig::default()
        };
        assert!(matches!(campaign(&config), Err(FuzzError::BadDims { .. })));

        let config = FuzzConfig {
            floor: 0.5,
            ..FuzzConfig::default()
        };
        assert!(matches!(campaign(&config), Err(FuzzError::BadFloor { .. })));
    }
}
