//! The eight-dimensional Kac–Paljutkin quantum group `KP`.
//!
//! `C(KP) = C⁴ ⊕ M₂(C)`: abelian coordinates `e_1 … e_4` and one 2×2 block.

use std::f64::consts::FRAC_PI_4;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::algebra::{l1_norm, qtv_distance, AlgebraElement, AlgebraShape, CMatrix};
use crate::error::{Error, Result};
use crate::fourier::{scalar_block, BlockLabel, FourierProfile, Group};
use crate::idempotents::IdempotentSpec;
use crate::sekine::{StateCondition, StateFailure, StateReport};
use crate::walks::{
    burn_in, check_steps, clamp, power_coefficient, smallest_period, status_of, Evidence,
    EvidenceStatus, LimitClassification, Outcome, StepRecord, WalkReport, CYCLE_TOL,
};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// An irreducible representation of `KP`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KpLabel {
    /// `ρ(1) … ρ(4)`.
    Rho(u8),
    /// The two-dimensional `𝔛`.
    Frak,
}

impl KpLabel {
    pub const ALL: [KpLabel; 5] = [
        KpLabel::Rho(1),
        KpLabel::Rho(2),
        KpLabel::Rho(3),
        KpLabel::Rho(4),
        KpLabel::Frak,
    ];

    pub fn dim(&self) -> usize {
        match self {
            KpLabel::Rho(_) => 1,
            KpLabel::Frak => 2,
        }
    }
}

impl fmt::Display for KpLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KpLabel::Rho(u) => write!(f, "g{u}"),
            KpLabel::Frak => f.write_str("gX"),
        }
    }
}

impl FromStr for KpLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "g1" => Ok(KpLabel::Rho(1)),
            "g2" => Ok(KpLabel::Rho(2)),
            "g3" => Ok(KpLabel::Rho(3)),
            "g4" => Ok(KpLabel::Rho(4)),
            "gX" => Ok(KpLabel::Frak),
            other => Err(Error::LabelSyntax(format!(
                "{other:?}: expected g1..g4 or gX"
            ))),
        }
    }
}

/// `g = Σ g_u ρ(u) + g_X χ(𝔛)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KpCoefficients {
    pub g: [Complex64; 4],
    pub gx: Complex64,
}

impl KpCoefficients {
    pub fn new(g1: Complex64, g2: Complex64, g3: Complex64, g4: Complex64, gx: Complex64) -> Self {
        Self {
            g: [g1, g2, g3, g4],
            gx,
        }
    }

    pub fn real(g1: f64, g2: f64, g3: f64, g4: f64, gx: f64) -> Self {
        Self::new(c(g1), c(g2), c(g3), c(g4), c(gx))
    }

    pub fn zero() -> Self {
        Self::real(0.0, 0.0, 0.0, 0.0, 0.0)
    }

    /// The Haar driver `ρ(1)`.
    pub fn unit() -> Self {
        Self::real(1.0, 0.0, 0.0, 0.0, 0.0)
    }

    pub fn get(&self, label: KpLabel) -> Complex64 {
        match label {
            KpLabel::Rho(u) => self.g[(u - 1) as usize],
            KpLabel::Frak => self.gx,
        }
    }

    pub fn set(&mut self, label: KpLabel, value: Complex64) -> Result<()> {
        match label {
            KpLabel::Rho(u @ 1..=4) => self.g[(u - 1) as usize] = value,
            KpLabel::Rho(u) => {
                return Err(Error::LabelSyntax(format!("rho({u}) does not exist on KP")))
            }
            KpLabel::Frak => self.gx = value,
        }
        Ok(())
    }

    pub fn ratio(&self, label: KpLabel) -> Complex64 {
        self.get(label) / label.dim() as f64
    }

    /// `g^{⋆k}`: coefficients `g_α^k / d_α^{k−1}`.
    pub fn power(&self, k: u64) -> Result<Self> {
        check_steps(k)?;
        let mut out = Self::zero();
        for label in KpLabel::ALL {
            out.set(
                label,
                power_coefficient(self.get(label), label.dim() as f64, k),
            )?;
        }
        Ok(out)
    }

    pub fn to_element(&self) -> AlgebraElement {
        let mut x = AlgebraElement::zero(AlgebraShape::kac_paljutkin());
        for (label, chi) in kp_irreps() {
            x = &x + &chi.scale(self.get(label));
        }
        x
    }
}

fn element(abelian: [f64; 4], matrix: [[Complex64; 2]; 2]) -> AlgebraElement {
    AlgebraElement::new(
        AlgebraShape::kac_paljutkin(),
        abelian.iter().map(|&v| c(v)).collect(),
        CMatrix::from_row_slice(
            2,
            2,
            &[matrix[0][0], matrix[0][1], matrix[1][0], matrix[1][1]],
        ),
    )
    .expect("KP shape")
}

fn diag(a: f64, b: f64) -> [[Complex64; 2]; 2] {
    [[c(a), c(0.0)], [c(0.0), c(b)]]
}

/// Characters of `ρ(1) … ρ(4)` and `χ(𝔛)`.
pub fn kp_irreps() -> Vec<(KpLabel, AlgebraElement)> {
    vec![
        (
            KpLabel::Rho(1),
            element([1.0, 1.0, 1.0, 1.0], diag(1.0, 1.0)),
        ),
        (
            KpLabel::Rho(2),
            element([1.0, -1.0, -1.0, 1.0], diag(1.0, -1.0)),
        ),
        (
            KpLabel::Rho(3),
            element([1.0, -1.0, -1.0, 1.0], diag(-1.0, 1.0)),
        ),
        (
            KpLabel::Rho(4),
            element([1.0, 1.0, 1.0, 1.0], diag(-1.0, -1.0)),
        ),
        (
            KpLabel::Frak,
            element([2.0, 0.0, 0.0, -2.0], diag(0.0, 0.0)),
        ),
    ]
}

/// The matrix coefficients `𝔛_{ij}` of the two-dimensional irrep.
pub fn frak_coefficients() -> [[AlgebraElement; 2]; 2] {
    let w = Complex64::from_polar(1.0, FRAC_PI_4);
    let zero = c(0.0);
    [
        [
            element([1.0, -1.0, 1.0, -1.0], diag(0.0, 0.0)),
            element([0.0; 4], [[zero, w], [w.conj(), zero]]),
        ],
        [
            element([0.0; 4], [[zero, w.conj()], [w, zero]]),
            element([1.0, 1.0, -1.0, -1.0], diag(0.0, 0.0)),
        ],
    ]
}

/// `\hat{F(x)}(β)` for every irrep, from first principles: `∫ β_{ij} x`.
pub fn kp_fourier_profile(x: &AlgebraElement) -> Result<FourierProfile> {
    if x.shape() != AlgebraShape::kac_paljutkin() {
        return Err(Error::ShapeMismatch(
            "element does not live in C(KP)".into(),
        ));
    }
    let mut blocks = Vec::new();
    for (label, chi) in kp_irreps().into_iter().take(4) {
        let KpLabel::Rho(u) = label else {
            unreachable!()
        };
        blocks.push((
            BlockLabel::KpRho(u),
            scalar_block(crate::algebra::haar_integral(&(&chi * x))),
        ));
    }
    let frak = frak_coefficients();
    let block = CMatrix::from_fn(2, 2, |i, j| {
        crate::algebra::haar_integral(&(&frak[i][j] * x))
    });
    blocks.push((BlockLabel::KpFrak, block));
    Ok(FourierProfile::new(Group::KacPaljutkin, blocks))
}

/// The profile of a central element: `g_u` on `ρ(u)` (each is self-inverse)
/// and `½ g_X I₂` on `𝔛`.
pub fn kp_central_profile(g: &KpCoefficients) -> FourierProfile {
    let mut blocks: Vec<(BlockLabel, CMatrix)> = (1..=4u8)
        .map(|u| (BlockLabel::KpRho(u), scalar_block(g.get(KpLabel::Rho(u)))))
        .collect();
    blocks.push((BlockLabel::KpFrak, CMatrix::identity(2, 2) * (g.gx * 0.5)));
    FourierProfile::new(Group::KacPaljutkin, blocks)
}

/// Checks `g_1 = 1`, realness, and the positivity inequalities.
pub fn kp_validate_state(g: &KpCoefficients, tol: f64) -> StateReport {
    let mut failures = Vec::new();
    if (g.g[0] - c(1.0)).norm() > tol {
        failures.push(StateFailure {
            condition: StateCondition::Normalization,
            witness: format!("g1 = {}", g.g[0]),
        });
    }
    for label in KpLabel::ALL {
        let z = g.get(label);
        if z.im.abs() > tol {
            failures.push(StateFailure {
                condition: StateCondition::NonRealCoefficient,
                witness: format!("{label} = {z}"),
            });
        }
    }
    let [g1, g2, g3, g4] = g.g.map(|z| z.re);
    let gx = g.gx.re;
    let inequalities = [
        ("g1 + g2 + g3 + g4 + 2gX", g1 + g2 + g3 + g4 + 2.0 * gx),
        ("g1 + g2 + g3 + g4 - 2gX", g1 + g2 + g3 + g4 - 2.0 * gx),
        ("g1 + g2 - g3 - g4", g1 + g2 - g3 - g4),
        ("g1 - g2 + g3 - g4", g1 - g2 + g3 - g4),
        ("g1 - g2 - g3 + g4", g1 - g2 - g3 + g4),
    ];
    for (name, value) in inequalities {
        if value < -tol {
            failures.push(StateFailure {
                condition: StateCondition::NegativeCoefficient,
                witness: format!("{name} = {value:.6e}"),
            });
        }
    }
    StateReport::from_failures(failures)
}

/// Pal's idempotents: the elements `x` with `φ_i = F(x)`, indexed `1..=8`.
pub fn pal_idempotents() -> Vec<AlgebraElement> {
    vec![
        element([8.0, 0.0, 0.0, 0.0], diag(0.0, 0.0)),
        element([4.0, 4.0, 0.0, 0.0], diag(0.0, 0.0)),
        element([4.0, 0.0, 4.0, 0.0], diag(0.0, 0.0)),
        element([4.0, 0.0, 0.0, 4.0], diag(0.0, 0.0)),
        element([2.0, 2.0, 2.0, 2.0], diag(0.0, 0.0)),
        element([2.0, 0.0, 0.0, 2.0], diag(2.0, 0.0)),
        element([2.0, 0.0, 0.0, 2.0], diag(0.0, 2.0)),
        element([1.0, 1.0, 1.0, 1.0], diag(1.0, 1.0)),
    ]
}

pub fn pal_element(index: u8) -> Result<AlgebraElement> {
    match index {
        1..=8 => Ok(pal_idempotents().swap_remove(index as usize - 1)),
        _ => Err(Error::InvalidSpec(format!(
            "phi_{index} does not exist; Pal lists phi_1..phi_8"
        ))),
    }
}

/// A validated random walk on `KP`.
#[derive(Clone, Debug)]
pub struct KpWalk {
    g: KpCoefficients,
    tol: f64,
}

impl KpWalk {
    pub fn new(g: KpCoefficients, tol: f64) -> Result<Self> {
        kp_validate_state(&g, tol).into_result()?;
        Ok(Self { g, tol })
    }

    pub fn coefficients(&self) -> &KpCoefficients {
        &self.g
    }

    pub fn qtv(&self, k: u64) -> Result<f64> {
        let x = self.g.power(k)?.to_element();
        let one = AlgebraElement::unit(AlgebraShape::kac_paljutkin());
        Ok(clamp(qtv_distance(&x, &one)?))
    }

    /// `(½ max |g_u|^k, √(¼ Σ |g_v|^{2k} + |g_X|^{2k} / 4^k))`.
    pub fn bounds(&self, k: u64) -> Result<(f64, f64)> {
        check_steps(k)?;
        let kf = k as f64;
        let m = (2..=4)
            .map(|u| self.g.get(KpLabel::Rho(u)).norm())
            .fold(0.0, f64::max);
        let lower = 0.5 * m.powf(kf);
        let ones: f64 = (2..=4)
            .map(|u| self.g.get(KpLabel::Rho(u)).norm().powf(2.0 * kf))
            .sum();
        let frak = (self.g.gx.norm() / 2.0).powf(2.0 * kf);
        Ok((clamp(lower), clamp((0.25 * ones + frak).sqrt())))
    }

    fn evidence(&self) -> Result<Vec<Evidence>> {
        KpLabel::ALL[1..]
            .iter()
            .map(|&l| {
                let ratio = self.g.ratio(l);
                let label = l.to_string();
                let status = status_of(&label, ratio, self.tol)?;
                Ok(Evidence {
                    label,
                    ratio,
                    status,
                })
            })
            .collect()
    }

    pub fn detect_cycle(&self, max_period: usize, tol: f64) -> Result<Option<usize>> {
        let evidence = self.evidence()?;
        let inside = evidence
            .iter()
            .filter(|e| e.status == EvidenceStatus::InsideDisc)
            .map(|e| e.ratio.norm())
            .fold(0.0, f64::max);
        let k0 = burn_in(inside, 1e-10, max_period as u64);
        let base = self.g.power(k0)?.to_element();
        smallest_period(max_period, k0, tol, |_, k| {
            Ok(l1_norm(&self.g.power(k)?.to_element().checked_sub(&base)?))
        })
    }

    pub fn classify(&self) -> Result<LimitClassification> {
        let evidence = self.evidence()?;
        let status = |label: &str| {
            evidence
                .iter()
                .find(|e| e.label == label)
                .map(|e| e.status)
                .expect("label present")
        };
        let mut notes = vec![
            "phi_2 and phi_3 are never limits: the e_2 and e_3 coefficients of g^k agree"
                .to_string(),
        ];
        if evidence
            .iter()
            .any(|e| e.status == EvidenceStatus::OnCircle)
        {
            let period = self.detect_cycle(8, CYCLE_TOL)?;
            return Ok(LimitClassification {
                outcome: Outcome::Diverges { period },
                evidence,
                branch: "diverges".into(),
                notes,
            });
        }
        let one = |l: &str| status(l) == EvidenceStatus::EqualsOne;
        let ones = ["g2", "g3", "g4"].iter().filter(|l| one(l)).count();
        let (branch, index) = if one("gX") {
            ("gX = 2", 1)
        } else if ones >= 2 {
            ("two one-dimensional coefficients equal 1", 4)
        } else if one("g2") {
            ("g2 = 1", 6)
        } else if one("g3") {
            ("g3 = 1", 7)
        } else if one("g4") {
            ("g4 = 1", 5)
        } else {
            return Ok(LimitClassification {
                outcome: Outcome::ConvergesToHaar,
                evidence,
                branch: "haar".into(),
                notes,
            });
        };
        let mut limit = KpCoefficients::unit();
        for e in &evidence {
            if e.status == EvidenceStatus::EqualsOne {
                let label: KpLabel = e.label.parse()?;
                limit.set(label, c(label.dim() as f64))?;
            }
        }
        let dev = limit.to_element().max_abs_diff(&pal_element(index)?)?;
        if dev > 1e-8 {
            return Err(Error::Ambiguous(format!(
                "case {branch} predicts phi_{index}, which differs from the limit by {dev:.3e}"
            )));
        }
        if index == 1 {
            notes.push("F(g) = phi_1 already at k = 1".into());
        }
        Ok(LimitClassification {
            outcome: Outcome::ConvergesTo(IdempotentSpec::Pal(index)),
            evidence,
            branch: branch.into(),
            notes,
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
        let classification = self.classify()?;
        let cycle = match classification.outcome {
            Outcome::Diverges { period } => period,
            _ => None,
        };
        Ok(WalkReport {
            group: "kp".into(),
            n: None,
            steps,
            classification,
            cycle,
        })
    }
}

pub fn kp_bounds(g: &KpCoefficients, k: u64, tol: f64) -> Result<(f64, f64)> {
    KpWalk::new(*g, tol)?.bounds(k)
}

pub fn kp_classify(g: &KpCoefficients, tol: f64) -> Result<LimitClassification> {
    KpWalk::new(*g, tol)?.classify()
}
