//! Points on the strictly positive probability simplex, and pairs of them.
//!
//! Everything downstream evaluates sums over the elementwise likelihood
//! ratios `p_i / q_i`, so zero or negative mass is rejected outright rather
//! than epsilon-clamped: the generator functions are only defined on (0, ∞).
//! The sampler keeps ratios bounded away from 0 and ∞ with a configurable
//! entry floor, which keeps the interval bounds finite.

use std::fs;
use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Absolute tolerance on `|Σp - 1|` accepted by [`Distribution::validate`].
///
/// Tight enough to catch data errors, loose enough for decimal text input.
pub const NORMALIZATION_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum SimplexError {
    #[error("entry {index} must be strictly positive and finite, got {value}")]
    NonPositiveEntry { index: usize, value: f64 },

    #[error("entries sum to {sum}, more than {NORMALIZATION_TOL:e} away from 1 (pass normalize to rescale)")]
    NotNormalized { sum: f64 },

    #[error("a distribution needs at least 2 entries, got {0}")]
    TooShort(usize),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("dimension must be at least 2, got {0}")]
    BadDimension(usize),

    #[error("floor must satisfy 0 < floor < 1/n, got {floor} with n = {n}")]
    BadFloor { floor: f64, n: usize },

    #[error("{path}: {message}")]
    Parse { path: String, message: String },
}

/// A validated distribution: strictly positive entries summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    probs: Vec<f64>,
}

impl Distribution {
    /// Check `raw` for simplex membership and wrap it.
    ///
    /// With `normalize` set, entries are divided by their sum before the
    /// normalization check; entries must be strictly positive either way.
    pub fn validate(raw: &[f64], normalize: bool) -> Result<Self, SimplexError> {
        if raw.len() < 2 {
            return Err(SimplexError::TooShort(raw.len()));
        }
        for (index, &value) in raw.iter().enumerate() {
            if !value.is_finite() || value <= 0.0 {
                return Err(SimplexError::NonPositiveEntry { index, value });
            }
        }
        let sum: f64 = raw.iter().sum();
        let probs: Vec<f64> = if normalize {
            raw.iter().map(|&x| x / sum).collect()
        } else {
            raw.to_vec()
        };
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOL {
            return Err(SimplexError::NotNormalized { sum });
        }
        Ok(Self { probs })
    }

    /// The uniform distribution on `n` outcomes.
    pub fn uniform(n: usize) -> Result<Self, SimplexError> {
        if n < 2 {
            return Err(SimplexError::BadDimension(n));
        }
        Ok(Self {
            probs: vec![1.0 / n as f64; n],
        })
    }

    /// Wrap entries already known to lie on the simplex.
    pub(crate) fn from_normalized(probs: Vec<f64>) -> Self {
        Self { probs }
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Pointwise midpoint `(P + Q)/2`, itself a distribution.
    pub fn midpoint(&self, other: &Self) -> Result<Self, SimplexError> {
        if self.len() != other.len() {
            return Err(SimplexError::LengthMismatch(self.len(), other.len()));
        }
        Ok(Self::from_normalized(
            self.probs
                .iter()
                .zip(&other.probs)
                .map(|(&a, &b)| 0.5 * (a + b))
                .collect(),
        ))
    }
}

/// An ordered pair `(P, Q)` with the elementwise ratio extremes cached.
///
/// For exactly normalized inputs the extremes bracket 1: the ratios cannot
/// all sit on the same side of 1 when both vectors sum to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionPair {
    p: Distribution,
    q: Distribution,
    ratio_min: f64,
    ratio_max: f64,
}

impl DistributionPair {
    pub fn new(p: Distribution, q: Distribution) -> Result<Self, SimplexError> {
        if p.len() != q.len() {
            return Err(SimplexError::LengthMismatch(p.len(), q.len()));
        }
        let mut ratio_min = f64::INFINITY;
        let mut ratio_max = 0.0f64;
        for (&pi, &qi) in p.probs.iter().zip(&q.probs) {
            let t = pi / qi;
            ratio_min = ratio_min.min(t);
            ratio_max = ratio_max.max(t);
        }
        Ok(Self {
            p,
            q,
            ratio_min,
            ratio_max,
        })
    }

    pub fn p(&self) -> &Distribution {
        &self.p
    }

    pub fn q(&self) -> &Distribution {
        &self.q
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// `r = min_i p_i/q_i`.
    pub fn ratio_min(&self) -> f64 {
        self.ratio_min
    }

    /// `R = max_i p_i/q_i`.
    pub fn ratio_max(&self) -> f64 {
        self.ratio_max
    }

    /// The reversed pair `(Q, P)`, with its own ratio extremes.
    pub fn swapped(&self) -> Self {
        Self::new(self.q.clone(), self.p.clone()).expect("lengths already equal")
    }
}

/// Draw one uniform (flat Dirichlet) sample by normalizing unit-exponential
/// draws, clamp entries below at `floor`, and renormalize.
fn sample_one<R: Rng + ?Sized>(rng: &mut R, n: usize, floor: f64) -> Distribution {
    loop {
        let mut v: Vec<f64> = (0..n)
            .map(|_| {
                let u: f64 = rng.gen();
                -(1.0 - u).ln()
            })
            .collect();
        let sum: f64 = v.iter().sum();
        if sum <= 0.0 {
            continue; // all-zero draw; vanishingly rare but well-defined
        }
        for x in &mut v {
            *x = (*x / sum).max(floor);
        }
        let sum: f64 = v.iter().sum();
        for x in &mut v {
            *x /= sum;
        }
        return Distribution::from_normalized(v);
    }
}

fn check_sample_args(n: usize, floor: f64) -> Result<(), SimplexError> {
    if n < 2 {
        return Err(SimplexError::BadDimension(n));
    }
    if !floor.is_finite() || floor <= 0.0 || floor >= 1.0 / n as f64 {
        return Err(SimplexError::BadFloor { floor, n });
    }
    Ok(())
}

/// Sample a single distribution from an existing RNG stream.
pub fn sample_distribution_with<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    floor: f64,
) -> Result<Distribution, SimplexError> {
    check_sample_args(n, floor)?;
    Ok(sample_one(rng, n, floor))
}

/// Sample an independent pair from an existing RNG stream.
pub fn sample_pair_with<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    floor: f64,
) -> Result<DistributionPair, SimplexError> {
    check_sample_args(n, floor)?;
    let p = sample_one(rng, n, floor);
    let q = sample_one(rng, n, floor);
    DistributionPair::new(p, q)
}

/// Sample an independent pair of uniform-on-the-simplex distributions.
///
/// Deterministic: the output depends only on `(seed, n, floor)`.
pub fn sample_pair(seed: u64, n: usize, floor: f64) -> Result<DistributionPair, SimplexError> {
    check_sample_args(n, floor)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_pair_with(&mut rng, n, floor)
}

/// On-disk layouts accepted by [`load`]. No other formats are supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    /// One decimal float per line, UTF-8; blank lines are skipped.
    Lines,
    /// A single JSON array of numbers.
    JsonArray,
    /// First column of a headerless CSV.
    CsvColumn,
}

impl InputFormat {
    /// `.json` and `.csv` map to their formats; everything else is `Lines`.
    pub fn from_extension(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => InputFormat::JsonArray,
            Some("csv") => InputFormat::CsvColumn,
            _ => InputFormat::Lines,
        }
    }
}

/// Read a distribution from `path` and pass it through [`Distribution::validate`].
pub fn load(
    path: &Path,
    format: InputFormat,
    normalize: bool,
) -> Result<Distribution, SimplexError> {
    let parse_err = |message: String| SimplexError::Parse {
        path: path.display().to_string(),
        message,
    };
    let text = fs::read_to_string(path).map_err(|e| parse_err(e.to_string()))?;
    let raw: Vec<f64> = match format {
        InputFormat::Lines => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .enumerate()
            .map(|(i, l)| {
                l.parse::<f64>()
                    .map_err(|e| parse_err(format!("line {}: '{}': {}", i + 1, l, e)))
            })
            .collect::<Result<_, _>>()?,
        InputFormat::JsonArray => {
            serde_json::from_str(&text).map_err(|e| parse_err(e.to_string()))?
        }
        InputFormat::CsvColumn => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .enumerate()
            .map(|(i, l)| {
                let field = l.split(',').next().unwrap_or("").trim();
                field
                    .parse::<f64>()
                    .map_err(|e| parse_err(format!("row {}: '{}': {}", i + 1, field, e)))
            })
            .collect::<Result<_, _>>()?,
    };
    if raw.is_empty() {
        return Err(parse_err("no entries found".to_string()));
    }
    Distribution::validate(&raw, normalize)
}
