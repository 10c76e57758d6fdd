//! Starlike maps of order `alpha` driven by atomic Herglotz measures.
//!
//! Every starlike function of order `alpha` normalized by `f(0) = 0`,
//! `f'(0) = 1` satisfies `z f'(z) / f(z) = H(z)` where
//!
//! ```text
//! H(z) = sum_j lambda_j (1 + gamma z e^(-i t_j)) / (1 - z e^(-i t_j)),
//! gamma = 1 - 2 alpha,
//! ```
//!
//! for a probability measure on the circle; this module works with finite
//! atomic measures `{(t_j, lambda_j)}`. Integrating `H/z` gives the map in
//! closed form,
//!
//! ```text
//! f(z) = z * prod_j (1 - z e^(-i t_j))^(-(2 - 2 alpha) lambda_j),
//! ```
//!
//! with principal logarithms (safe, since `Re(1 - z e^(-i t)) > 0` on the
//! disk). The length of the image of the radial segment `[0, r e^(i theta)]`
//! is `ell(r, theta) = int_0^r |f'(rho e^(i theta))| d rho`, and the object
//! of study is the ratio `ell / |f(r e^(i theta))|`.
//!
//! Kernel moduli are evaluated in polar form: with `delta = theta - t_j`,
//!
//! ```text
//! 1 - rho e^(i delta) = (1 - rho) + 2 rho sin^2(delta/2) - i rho sin(delta),
//! ```
//!
//! whose real part is a sum of nonnegative terms, so no cancellation occurs
//! as `rho -> 1`, `delta -> 0`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quadrature::{self, QuadConfig, QuadError};
use crate::specfun::{OrderAlpha, SpecFunError};

const TAU: f64 = 2.0 * std::f64::consts::PI;
/// Nodes closer than this (on the circle) are considered the same atom.
const NODE_MERGE_TOL: f64 = 1e-14;
/// Allowed deviation of the weight sum from 1 in the strict constructor.
const WEIGHT_SUM_TOL: f64 = 1e-12;
/// Raw weight sums further than this from 1 trigger a load warning.
pub const RENORMALIZATION_WARN_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StarlikeError {
    #[error("measure must contain at least one atom")]
    EmptyMeasure,
    #[error("atom weight must be a positive finite number, got {0}")]
    InvalidWeight(f64),
    #[error("atom node must be finite, got {0}")]
    InvalidNode(f64),
    #[error("atom weights sum to {0}, expected 1 within 1e-12")]
    WeightSumOff(f64),
    #[error("evaluation point must lie inside the unit disk, got |z| = {0}")]
    OutsideDisk(f64),
    #[error("radius must satisfy 0 < r < 1, got {0}")]
    InvalidRadius(f64),
    #[error("angle must be finite, got {0}")]
    InvalidAngle(f64),
    #[error("map modulus degenerate at the requested point")]
    DegenerateModulus,
    #[error("measure file: {0}")]
    MalformedFile(String),
    #[error(transparent)]
    Order(#[from] SpecFunError),
    #[error(transparent)]
    Quad(#[from] QuadError),
}

/// One atom of a Herglotz measure: node angle `t` in `(-pi, pi]` and weight
/// `lambda > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub node: f64,
    pub weight: f64,
}

/// Finite atomic probability measure on the unit circle.
///
/// Construction folds nodes into `(-pi, pi]`, sorts them, and merges nodes
/// closer than 1e-14 (including across the seam at pi) by summing their
/// weights.
#[derive(Debug, Clone, PartialEq)]
pub struct HerglotzMeasure {
    atoms: Vec<Atom>,
}

fn fold_angle(t: f64) -> f64 {
    let mut x = t % TAU;
    if x <= -std::f64::consts::PI {
        x += TAU;
    } else if x > std::f64::consts::PI {
        x -= TAU;
    }
    x
}

impl HerglotzMeasure {
    /// Strict constructor: weights must already sum to 1 within 1e-12.
    pub fn new(atoms: impl IntoIterator<Item = (f64, f64)>) -> Result<Self, StarlikeError> {
        let m = Self::build(atoms)?;
        let sum: f64 = m.atoms.iter().map(|a| a.weight).sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(StarlikeError::WeightSumOff(sum));
        }
        Ok(m)
    }

    /// Accepts any positive weights and rescales them to sum to 1.
    pub fn normalized(atoms: impl IntoIterator<Item = (f64, f64)>) -> Result<Self, StarlikeError> {
        let mut m = Self::build(atoms)?;
        let sum: f64 = m.atoms.iter().map(|a| a.weight).sum();
        for a in &mut m.atoms {
            a.weight /= sum;
        }
        Ok(m)
    }

    /// The one-atom measure at angle `t` (the extremal, Koebe-type case).
    pub fn single(t: f64) -> Self {
        Self { atoms: vec![Atom { node: fold_angle(t), weight: 1.0 }] }
    }

    fn build(atoms: impl IntoIterator<Item = (f64, f64)>) -> Result<Self, StarlikeError> {
        let mut list: Vec<Atom> = Vec::new();
        for (t, w) in atoms {
            if !t.is_finite() {
                return Err(StarlikeError::InvalidNode(t));
            }
            if !w.is_finite() || w <= 0.0 {
                return Err(StarlikeError::InvalidWeight(w));
            }
            list.push(Atom { node: fold_angle(t), weight: w });
        }
        if list.is_empty() {
            return Err(StarlikeError::EmptyMeasure);
        }
        list.sort_by(|a, b| a.node.total_cmp(&b.node));
        let mut merged: Vec<Atom> = Vec::with_capacity(list.len());
        for a in list {
            match merged.last_mut() {
                Some(last) if (a.node - last.node).abs() <= NODE_MERGE_TOL => {
                    last.weight += a.weight;
                }
                _ => merged.push(a),
            }
        }
        // the circle wraps: an atom at pi sits next to one at -pi + eps
        if merged.len() > 1 {
            let first = merged[0];
            let last = *merged.last().unwrap();
            if (first.node + TAU - last.node).abs() <= NODE_MERGE_TOL {
                merged[0].weight += last.weight;
                merged.pop();
            }
        }
        Ok(Self { atoms: merged })
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn weight_sum(&self) -> f64 {
        self.atoms.iter().map(|a| a.weight).sum()
    }

    /// Deterministic random measure: `n_atoms` nodes drawn uniformly on
    /// `(-pi, pi]` and weights from a normalized positive (exponential) draw.
    /// Same seed, same measure; there is no ambient entropy.
    pub fn sample(seed: u64, n_atoms: usize) -> Result<Self, StarlikeError> {
        if n_atoms == 0 {
            return Err(StarlikeError::EmptyMeasure);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut nodes = Vec::with_capacity(n_atoms);
        for _ in 0..n_atoms {
            let u: f64 = rng.gen();
            nodes.push(std::f64::consts::PI - TAU * u);
        }
        let mut weights = Vec::with_capacity(n_atoms);
        for _ in 0..n_atoms {
            let w = loop {
                let u: f64 = rng.gen();
                let w = -(1.0 - u).ln();
                if w > 0.0 {
                    break w;
                }
            };
            weights.push(w);
        }
        Self::normalized(nodes.into_iter().zip(weights))
    }
}

/// A starlike map of order `alpha`, determined by a Herglotz measure.
#[derive(Debug, Clone, PartialEq)]
pub struct StarlikeMap {
    measure: HerglotzMeasure,
    order: OrderAlpha,
}

impl StarlikeMap {
    pub fn new(measure: HerglotzMeasure, order: OrderAlpha) -> Self {
        Self { measure, order }
    }

    pub fn measure(&self) -> &HerglotzMeasure {
        &self.measure
    }

    pub fn order(&self) -> OrderAlpha {
        self.order
    }

    fn check_disk(z: Complex64) -> Result<(f64, f64), StarlikeError> {
        let rho = z.norm();
        if !rho.is_finite() || rho >= 1.0 {
            return Err(StarlikeError::OutsideDisk(rho));
        }
        Ok((rho, z.arg()))
    }

    /// `1 - rho e^(i delta)` without cancellation.
    fn one_minus_rot(rho: f64, delta: f64) -> Complex64 {
        let s = (0.5 * delta).sin();
        Complex64::new((1.0 - rho) + 2.0 * rho * s * s, -rho * delta.sin())
    }

    fn h_polar(&self, rho: f64, theta: f64) -> Complex64 {
        let g = self.order.gamma_param();
        let mut h = Complex64::new(0.0, 0.0);
        for a in self.measure.atoms() {
            let delta = theta - a.node;
            let num = Complex64::new(1.0 + g * rho * delta.cos(), g * rho * delta.sin());
            h += a.weight * num / Self::one_minus_rot(rho, delta);
        }
        h
    }

    /// `log(f(z)/z) = -(2 - 2 alpha) sum_j lambda_j Log(1 - z e^(-i t_j))`.
    fn log_f_over_z(&self, rho: f64, theta: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for a in self.measure.atoms() {
            let delta = theta - a.node;
            let q = Self::one_minus_rot(rho, delta);
            let log_q = Complex64::new(0.5 * q.norm_sqr().ln(), q.im.atan2(q.re));
            acc += a.weight * log_q;
        }
        -(1.0 + self.order.gamma_param()) * acc
    }

    /// The Herglotz transfer function `H(z) = z f'(z) / f(z)`; `Re H > alpha`
    /// on the disk and `H(0) = 1`.
    pub fn transfer_h(&self, z: Complex64) -> Result<Complex64, StarlikeError> {
        let (rho, theta) = Self::check_disk(z)?;
        Ok(self.h_polar(rho, theta))
    }

    /// Evaluates the map. `f(0) = 0`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64, StarlikeError> {
        let (rho, theta) = Self::check_disk(z)?;
        Ok(z * self.log_f_over_z(rho, theta).exp())
    }

    /// Evaluates `f'`, via `f'(z) = H(z) f(z) / z`; the normalization gives
    /// `f'(0) = 1`.
    pub fn eval_prime(&self, z: Complex64) -> Result<Complex64, StarlikeError> {
        let (rho, theta) = Self::check_disk(z)?;
        Ok(self.h_polar(rho, theta) * self.log_f_over_z(rho, theta).exp())
    }

    fn abs_prime_polar(&self, rho: f64, theta: f64) -> f64 {
        self.h_polar(rho, theta).norm() * self.log_f_over_z(rho, theta).re.exp()
    }

    /// `|f(rho e^(i theta))|` computed without forming the complex value.
    pub fn abs_map_polar(&self, rho: f64, theta: f64) -> f64 {
        rho * self.log_f_over_z(rho, theta).re.exp()
    }

    /// Length of the image of the radial segment from 0 to `r e^(i theta)`:
    /// `int_0^r |f'(rho e^(i theta))| d rho`.
    pub fn ray_length(&self, r: f64, theta: f64, tol: f64) -> Result<f64, StarlikeError> {
        self.ray_length_cfg(r, theta, &QuadConfig::with_tol(tol)?)
    }

    pub fn ray_length_cfg(
        &self,
        r: f64,
        theta: f64,
        cfg: &QuadConfig,
    ) -> Result<f64, StarlikeError> {
        if !r.is_finite() || r <= 0.0 || r >= 1.0 {
            return Err(StarlikeError::InvalidRadius(r));
        }
        if !theta.is_finite() {
            return Err(StarlikeError::InvalidAngle(theta));
        }
        let res = quadrature::integrate_finite_cfg(
            |rho| self.abs_prime_polar(rho, theta),
            0.0,
            r,
            crate::quadrature::SingularitySpec::NONE,
            cfg,
        )?;
        Ok(res.value)
    }

    /// The length/modulus ratio `ell(r, theta) / |f(r e^(i theta))|`, the
    /// quantity bounded by the sharp constant `beta(alpha)`. Always >= 1.
    ///
    /// Uses the default quadrature tolerances. Supported up to `r = 1 - 1e-6`;
    /// closer to the boundary the refinement may exhaust its budget when
    /// `theta` points at an atom, and the call then fails honestly.
    pub fn gh_ratio(&self, r: f64, theta: f64) -> Result<f64, StarlikeError> {
        let ell = self.ray_length_cfg(r, theta, &QuadConfig::default())?;
        let modulus = self.abs_map_polar(r, theta);
        if modulus < 1e-300 {
            return Err(StarlikeError::DegenerateModulus);
        }
        Ok(ell / modulus)
    }
}

#[derive(Serialize, Deserialize)]
struct MeasureFileAtom {
    t: f64,
    w: f64,
}

#[derive(Serialize, Deserialize)]
struct MeasureFile {
    alpha: f64,
    atoms: Vec<MeasureFileAtom>,
}

/// Result of loading a measure file; weights are always renormalized, and
/// `renormalization_warning` flags a raw sum further than 1e-6 from 1.
pub struct MeasureLoad {
    pub map: StarlikeMap,
    pub raw_weight_sum: f64,
    pub renormalization_warning: bool,
}

/// Parses the measure JSON schema
/// `{"alpha": a, "atoms": [{"t": node, "w": weight}, ...]}`.
pub fn load_measure_json(text: &str) -> Result<MeasureLoad, StarlikeError> {
    let file: MeasureFile =
        serde_json::from_str(text).map_err(|e| StarlikeError::MalformedFile(e.to_string()))?;
    let order = OrderAlpha::new(file.alpha)?;
    let raw_weight_sum: f64 = file.atoms.iter().map(|a| a.w).sum();
    let measure = HerglotzMeasure::normalized(file.atoms.iter().map(|a| (a.t, a.w)))?;
    Ok(MeasureLoad {
        map: StarlikeMap::new(measure, order),
        raw_weight_sum,
        renormalization_warning: (raw_weight_sum - 1.0).abs() > RENORMALIZATION_WARN_TOL,
    })
}

/// Serializes a map back to the measure JSON schema.
pub fn measure_to_json(map: &StarlikeMap) -> String {
    let file = MeasureFile {
        alpha: map.order().alpha(),
        atoms: map
            .measure()
            .atoms()
            .iter()
            .map(|a| MeasureFileAtom { t: a.node, w: a.weight })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("measure schema serializes")
}
