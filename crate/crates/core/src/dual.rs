//! Random walks on the dual quantum group `\widehat{KP_n}`.
//!
//! Dual elements are coefficient maps over the dual irreps `e^{(i,j)}`
//! (one-dimensional) and `X̂` (dimension `n`). They enter `C(KP_n)` only
//! through [`DualCentralElement::to_element`], which realizes
//! `F^{-1}(e^{(i,j)}) = e_{(−i,−j)}` and `F^{-1}(E^{ij}) = E_{ij} / n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{is_positive, singular_values, AlgebraElement, AlgebraShape, CMatrix};
use crate::error::{Error, Result};
use crate::fourier::BlockLabel;
use crate::sekine::{Sekine, StateCondition, StateFailure, StateReport};
use crate::walks::{
    check_steps, clamp, power_coefficient, Evidence, EvidenceStatus, LimitClassification, Outcome,
    StepRecord, WalkReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DualLabel {
    /// `e^{(i,j)}`.
    E(usize, usize),
    /// `X̂`, with character `Σ_i E^{ii}`.
    XHat,
}

impl DualLabel {
    pub const TRIVIAL: DualLabel = DualLabel::E(0, 0);

    pub fn dim(&self, n: usize) -> usize {
        match self {
            DualLabel::E(..) => 1,
            DualLabel::XHat => n,
        }
    }
}

impl fmt::Display for DualLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualLabel::E(i, j) => write!(f, "e:{i},{j}"),
            DualLabel::XHat => f.write_str("Xhat"),
        }
    }
}

impl FromStr for DualLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::LabelSyntax(format!("{s:?}: {reason}"));
        let s = s.trim();
        if s == "Xhat" {
            return Ok(DualLabel::XHat);
        }
        let rest = s
            .strip_prefix("e:")
            .ok_or_else(|| bad("expected e:i,j or Xhat"))?;
        let (i, j) = rest.split_once(',').ok_or_else(|| bad("expected e:i,j"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| bad("index is not a nonnegative integer"))
        };
        Ok(DualLabel::E(parse(i)?, parse(j)?))
    }
}

fn check_dual_label(n: usize, label: DualLabel) -> Result<()> {
    match label {
        DualLabel::E(i, j) if i >= n || j >= n => Err(Error::InvalidLabel {
            label: label.to_string(),
            n,
            reason: format!("indices must lie in 0..{n}"),
        }),
        _ => Ok(()),
    }
}

/// `a = Σ a_{(i,j)} e^{(i,j)} + a_X̂ Σ_i E^{ii}`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualCentralElement {
    n: usize,
    coeffs: BTreeMap<DualLabel, Complex64>,
}

impl DualCentralElement {
    pub fn new(n: usize, coeffs: impl IntoIterator<Item = (DualLabel, Complex64)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "KP_n needs n >= 2, got {n}"
            )));
        }
        let mut a = Self {
            n,
            coeffs: BTreeMap::new(),
        };
        for (label, value) in coeffs {
            a.set(label, value)?;
        }
        Ok(a)
    }

    /// The driver of the Haar state of the dual.
    pub fn haar(n: usize) -> Result<Self> {
        Self::new(n, [(DualLabel::TRIVIAL, Complex64::new(1.0, 0.0))])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, label: DualLabel) -> Complex64 {
        self.coeffs.get(&label).copied().unwrap_or_default()
    }

    pub fn set(&mut self, label: DualLabel, value: Complex64) -> Result<()> {
        check_dual_label(self.n, label)?;
        self.coeffs.insert(label, value);
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (DualLabel, Complex64)> + '_ {
        self.coeffs.iter().map(|(l, z)| (*l, *z))
    }

    /// Every dual label in a fixed order: `e^{(i,j)}` row-major, then `X̂`.
    pub fn labels(n: usize) -> Vec<DualLabel> {
        let mut out: Vec<DualLabel> = (0..n)
            .flat_map(|i| (0..n).map(move |j| DualLabel::E(i, j)))
            .collect();
        out.push(DualLabel::XHat);
        out
    }

    pub fn ratio(&self, label: DualLabel) -> Complex64 {
        self.get(label) / label.dim(self.n) as f64
    }

    /// `F^{-1}(a) = Σ a_{(i,j)} e_{(−i,−j)} + (a_X̂ / n) I_n` in `C(KP_n)`.
    pub fn to_element(&self) -> AlgebraElement {
        let n = self.n;
        let mut x = AlgebraElement::zero(AlgebraShape::sekine(n));
        for (label, z) in self.iter() {
            match label {
                DualLabel::E(i, j) => {
                    x.abelian_mut()[((n - i) % n) * n + (n - j) % n] = z;
                }
                DualLabel::XHat => {
                    *x.matrix_mut() = CMatrix::identity(n, n) * (z / n as f64);
                }
            }
        }
        x
    }

    /// `k`-th convolution power: `F^{-1}` turns it into the `k`-th pointwise power.
    pub fn power(&self, k: u64) -> Result<Self> {
        check_steps(k)?;
        let n = self.n;
        Self::new(
            n,
            self.iter()
                .map(|(l, z)| (l, power_coefficient(z, l.dim(n) as f64, k))),
        )
    }
}

/// `\hat{F^{-1}(a)}(β)`: `a_{(−i,−j)}` at `e^{(i,j)}` and `(a_X̂ / n) I_n` at `X̂`.
pub fn dual_fourier_values(a: &DualCentralElement) -> Vec<(DualLabel, CMatrix)> {
    let n = a.n;
    DualCentralElement::labels(n)
        .into_iter()
        .map(|label| {
            let block = match label {
                DualLabel::E(i, j) => {
                    CMatrix::from_element(1, 1, a.get(DualLabel::E((n - i) % n, (n - j) % n)))
                }
                DualLabel::XHat => CMatrix::identity(n, n) * (a.get(DualLabel::XHat) / n as f64),
            };
            (label, block)
        })
        .collect()
}

/// Real, nonnegative coefficients and `a_{(0,0)} = 1`.
pub fn dual_validate_state(a: &DualCentralElement, tol: f64) -> StateReport {
    let mut failures = Vec::new();
    let norm = a.get(DualLabel::TRIVIAL);
    if (norm - Complex64::new(1.0, 0.0)).norm() > tol {
        failures.push(StateFailure {
            condition: StateCondition::Normalization,
            witness: format!("a_e:0,0 = {norm}"),
        });
    }
    for (label, z) in a.iter() {
        if z.im.abs() > tol {
            failures.push(StateFailure {
                condition: StateCondition::NonRealCoefficient,
                witness: format!("a_{label} = {z}"),
            });
        } else if z.re < -tol {
            failures.push(StateFailure {
                condition: StateCondition::NegativeCoefficient,
                witness: format!("a_{label} = {:.6e}", z.re),
            });
        }
    }
    StateReport::from_failures(failures)
}

/// A central idempotent of `C(KP_n)` reached as a dual limit: `ε_α ∈ {0, 1}`
/// per dual label, with `ε_{(0,0)} = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpsilonVector {
    n: usize,
    ones: BTreeSet<(usize, usize)>,
    xhat: bool,
}

impl EpsilonVector {
    pub fn new(
        n: usize,
        ones: impl IntoIterator<Item = (usize, usize)>,
        xhat: bool,
    ) -> Result<Self> {
        let mut set = BTreeSet::from([(0, 0)]);
        for (i, j) in ones {
            check_dual_label(n, DualLabel::E(i, j))?;
            set.insert((i, j));
        }
        Ok(Self { n, ones: set, xhat })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, label: DualLabel) -> bool {
        match label {
            DualLabel::E(i, j) => self.ones.contains(&(i, j)),
            DualLabel::XHat => self.xhat,
        }
    }

    /// Labels `e^{(i,j)}` with `ε = 1`.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.ones.iter().copied()
    }

    /// The dual coefficients `a_α = d_α ε_α` that drive a walk to this limit in one step.
    pub fn driver(&self) -> DualCentralElement {
        let n = self.n;
        let mut a = DualCentralElement::new(
            n,
            self.ones
                .iter()
                .map(|&(i, j)| (DualLabel::E(i, j), Complex64::new(1.0, 0.0))),
        )
        .expect("valid labels");
        if self.xhat {
            a.set(DualLabel::XHat, Complex64::new(n as f64, 0.0))
                .expect("valid label");
        }
        a
    }

    /// The idempotent `Σ ε e_{(−i,−j)} + ε_X̂ I_n` of `C(KP_n)`.
    pub fn to_element(&self) -> AlgebraElement {
        self.driver().to_element()
    }
}

impl fmt::Display for EpsilonVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("epsilon{")?;
        for (k, (i, j)) in self.ones.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "e:{i},{j}")?;
        }
        if self.xhat {
            f.write_str(", Xhat")?;
        }
        f.write_str("}")
    }
}

/// Projection in `C(KP_n)`, positive, with unit coefficient at `e_(0,0)`.
pub fn dual_is_idempotent_state(x: &AlgebraElement, tol: f64) -> Result<bool> {
    let square = x.checked_mul(x)?;
    let unit_mass = (x.abelian()[0] - Complex64::new(1.0, 0.0)).norm() <= tol;
    Ok(square.max_abs_diff(x)? <= tol && unit_mass && is_positive(x, tol))
}

/// Whether `x` commutes with `trials` random elements of `C(KP_n)`.
pub fn dual_is_central(x: &AlgebraElement, trials: usize, tol: f64) -> Result<bool> {
    let shape = x.shape();
    let m = shape.matrix_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(0xD0A1);
    for _ in 0..trials {
        let y = CMatrix::from_fn(m, m, |_, _| {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        let comm = x.matrix() * &y - &y * x.matrix();
        if comm.iter().any(|z| z.norm() > tol) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A validated walk on the dual.
#[derive(Clone, Debug)]
pub struct DualWalk {
    a: DualCentralElement,
    sekine: Sekine,
    tol: f64,
}

impl DualWalk {
    pub fn new(a: DualCentralElement, tol: f64) -> Result<Self> {
        dual_validate_state(&a, tol).into_result()?;
        let sekine = Sekine::new(a.n)?;
        Ok(Self { a, sekine, tol })
    }

    pub fn state(&self) -> &DualCentralElement {
        &self.a
    }

    fn nontrivial(&self) -> impl Iterator<Item = DualLabel> + '_ {
        DualCentralElement::labels(self.a.n)
            .into_iter()
            .filter(|l| *l != DualLabel::TRIVIAL)
    }

    /// `(½ max (a_α/d_α)^k, ½ √(Σ a_β^{2k} / d_β^{2(k−1)}))` over nontrivial labels.
    pub fn bounds(&self, k: u64) -> Result<(f64, f64)> {
        check_steps(k)?;
        let n = self.a.n;
        let kf = k as f64;
        let mut worst: f64 = 0.0;
        let mut sum = 0.0;
        for label in self.nontrivial() {
            let d = label.dim(n) as f64;
            let r = self.a.ratio(label).norm();
            worst = worst.max(r);
            sum += d * d * r.powf(2.0 * kf);
        }
        Ok((clamp(0.5 * worst.powf(kf)), clamp(0.5 * sum.sqrt())))
    }

    /// Exact QTV to the dual Haar state, computed on the `KP_n` side: the
    /// difference `F^{-1}(a)^k − e_(0,0)` is read as a functional on
    /// `C(\widehat{KP_n})`, whose density blocks are Fourier blocks of `KP_n`.
    pub fn qtv(&self, k: u64) -> Result<f64> {
        let n = self.a.n;
        let nf = n as f64;
        let mut y = self.a.power(k)?.to_element();
        y.abelian_mut()[0] -= Complex64::new(1.0, 0.0);
        let mut x = AlgebraElement::zero(self.sekine.shape());
        for s in 0..n {
            for t in 0..n {
                x.abelian_mut()[s * n + t] =
                    y.abelian()[((n - s) % n) * n + (n - t) % n] * (2.0 * nf * nf);
            }
        }
        *x.matrix_mut() = y.matrix().transpose() * Complex64::new(2.0 * nf * nf, 0.0);
        let profile = self.sekine.fourier_profile(&x)?;
        let mut total = 0.0;
        for (label, block) in profile.blocks() {
            match label {
                BlockLabel::OneDim(_) => total += block[(0, 0)].norm(),
                BlockLabel::X { v, .. } if *v >= 1 && 2 * v != n => {
                    total += 2.0 * singular_values(block).iter().sum::<f64>();
                }
                _ => {}
            }
        }
        Ok(clamp(0.5 * total / (2.0 * nf * nf)))
    }

    fn evidence(&self) -> Vec<Evidence> {
        self.nontrivial()
            .map(|label| {
                let ratio = self.a.ratio(label);
                let r = ratio.re;
                let status = if r > 1.0 + self.tol {
                    EvidenceStatus::AboveOne
                } else if r >= 1.0 - self.tol {
                    EvidenceStatus::EqualsOne
                } else {
                    EvidenceStatus::InsideDisc
                };
                Evidence {
                    label: label.to_string(),
                    ratio,
                    status,
                }
            })
            .collect()
    }

    pub fn classify(&self) -> Result<LimitClassification> {
        let evidence = self.evidence();
        let n = self.a.n;
        if evidence
            .iter()
            .any(|e| e.status == EvidenceStatus::AboveOne)
        {
            return Ok(LimitClassification {
                outcome: Outcome::Diverges { period: None },
                evidence,
                branch: "dual-diverges".into(),
                notes: vec!["some a_alpha exceeds d_alpha".into()],
            });
        }
        let ones: Vec<DualLabel> = self
            .nontrivial()
            .zip(&evidence)
            .filter(|(_, e)| e.status == EvidenceStatus::EqualsOne)
            .map(|(l, _)| l)
            .collect();
        if ones.is_empty() {
            return Ok(LimitClassification {
                outcome: Outcome::ConvergesToHaar,
                evidence,
                branch: "dual-haar".into(),
                notes: Vec::new(),
            });
        }
        let eps = EpsilonVector::new(
            n,
            ones.iter().filter_map(|l| match l {
                DualLabel::E(i, j) => Some((*i, *j)),
                DualLabel::XHat => None,
            }),
            ones.contains(&DualLabel::XHat),
        )?;
        Ok(LimitClassification {
            outcome: Outcome::ConvergesToDual(eps),
            evidence,
            branch: "dual-central-idempotent".into(),
            notes: Vec::new(),
        })
    }

    pub fn trace(&self, k_max: u64) -> Result<WalkReport> {
        check_steps(k_max)?;
        let mut steps = Vec::with_capacity(k_max as usize);
        for k in 1..=k_max {
            let (lower, upper) = self.bounds(k)?;
            steps.push(StepRecord {
                k,
                qtv: self.qtv(k)?,
                lower,
                upper,
            });
        }
        Ok(WalkReport {
            group: "kpn-dual".into(),
            n: Some(self.a.n),
            steps,
            classification: self.classify()?,
            cycle: None,
        })
    }
}

pub fn dual_bounds(a: &DualCentralElement, k: u64, tol: f64) -> Result<(f64, f64)> {
    DualWalk::new(a.clone(), tol)?.bounds(k)
}

pub fn dual_classify(a: &DualCentralElement, tol: f64) -> Result<LimitClassification> {
    DualWalk::new(a.clone(), tol)?.classify()
}
