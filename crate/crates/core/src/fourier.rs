//! Fourier profiles: the matrices `F(x)^(β)` of a functional on every
//! irreducible representation. Convolution of functionals is the blockwise
//! matrix product of their profiles.

use std::fmt;

use num_complex::Complex64;

use crate::algebra::{AlgebraElement, AlgebraShape, CMatrix};
use crate::error::{Error, Result};
use crate::sekine::IrrepLabel;
use crate::{kp8, sekine};

/// The quantum group a profile (or an element) lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    KacPaljutkin,
    Sekine(usize),
}

impl Group {
    /// Infers the group from the algebra shape an element lives in.
    pub fn of_shape(shape: AlgebraShape) -> Result<Self> {
        if shape == AlgebraShape::kac_paljutkin() {
            return Ok(Group::KacPaljutkin);
        }
        let n = shape.matrix_dim();
        if n >= 2 && shape == AlgebraShape::sekine(n) {
            return Ok(Group::Sekine(n));
        }
        Err(Error::ShapeMismatch(format!(
            "{shape:?} is neither C(KP) nor C(KP_n)"
        )))
    }

    pub fn of(x: &AlgebraElement) -> Result<Self> {
        Self::of_shape(x.shape())
    }

    pub fn fourier_profile(&self, x: &AlgebraElement) -> Result<FourierProfile> {
        match *self {
            Group::KacPaljutkin => kp8::kp_fourier_profile(x),
            Group::Sekine(n) => sekine::Sekine::new(n)?.fourier_profile(x),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockLabel {
    /// A one-dimensional irrep of `KP_n` (1×1 block).
    OneDim(IrrepLabel),
    /// `X_{u,v}` for `v ∈ {0, …, ⌊n/2⌋}`; `v = 0` and `v = n/2` are the
    /// two-dimensional composites `ρ_u^+ ⊕ ρ_u^-` and `σ_u^+ ⊕ σ_u^-`.
    X { u: usize, v: usize },
    /// `ρ(1)…ρ(4)` on `KP`.
    KpRho(u8),
    /// The two-dimensional irrep `𝔛` of `KP`.
    KpFrak,
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockLabel::OneDim(l) => write!(f, "{l}"),
            BlockLabel::X { u, v } => write!(f, "X:{u},{v}"),
            BlockLabel::KpRho(u) => write!(f, "rho({u})"),
            BlockLabel::KpFrak => write!(f, "frak"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourierProfile {
    group: Group,
    blocks: Vec<(BlockLabel, CMatrix)>,
}

impl FourierProfile {
    pub fn new(group: Group, blocks: Vec<(BlockLabel, CMatrix)>) -> Self {
        Self { group, blocks }
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn blocks(&self) -> &[(BlockLabel, CMatrix)] {
        &self.blocks
    }

    pub fn block(&self, label: BlockLabel) -> Option<&CMatrix> {
        self.blocks
            .iter()
            .find(|(l, _)| *l == label)
            .map(|(_, m)| m)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.group != other.group || self.blocks.len() != other.blocks.len() {
            return Err(Error::ShapeMismatch(format!(
                "profiles over {:?} and {:?}",
                self.group, other.group
            )));
        }
        for ((la, ma), (lb, mb)) in self.blocks.iter().zip(&other.blocks) {
            if la != lb || ma.shape() != mb.shape() {
                return Err(Error::ShapeMismatch(format!("block {la} vs {lb}")));
            }
        }
        Ok(())
    }

    /// Blockwise product `self · other`, the profile of `F(x) ⋆ F(y)`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|((l, a), (_, b))| (*l, a * b))
            .collect();
        Ok(Self {
            group: self.group,
            blocks,
        })
    }

    /// `k`-fold convolution power; `k = 0` gives the counit profile.
    pub fn power(&self, k: u64) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|(l, m)| (*l, matrix_power(m, k)))
            .collect();
        Self {
            group: self.group,
            blocks,
        }
    }

    pub fn max_deviation(&self, other: &Self) -> Result<f64> {
        self.check_compatible(other)?;
        Ok(self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|((_, a), (_, b))| max_entry_diff(a, b))
            .fold(0.0, f64::max))
    }

    /// Largest `‖P² − P‖` entry over all blocks.
    pub fn idempotency_defect(&self) -> f64 {
        self.blocks
            .iter()
            .map(|(_, p)| max_entry_diff(&(p * p), p))
            .fold(0.0, f64::max)
    }

    pub fn is_idempotent(&self, tol: f64) -> bool {
        self.idempotency_defect() <= tol
    }

    /// Largest commutator entry `‖PQ − QP‖` over all blocks.
    pub fn commutator_defect(&self, other: &Self) -> Result<f64> {
        self.check_compatible(other)?;
        Ok(self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|((_, a), (_, b))| max_entry_diff(&(a * b), &(b * a)))
            .fold(0.0, f64::max))
    }

    /// Largest operator norm over the blocks.
    pub fn max_operator_norm(&self) -> f64 {
        self.blocks
            .iter()
            .map(|(_, m)| {
                crate::algebra::singular_values(m)
                    .into_iter()
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }
}

fn matrix_power(m: &CMatrix, mut k: u64) -> CMatrix {
    let mut result = CMatrix::identity(m.nrows(), m.ncols());
    let mut base = m.clone();
    while k > 0 {
        if k & 1 == 1 {
            result = &result * &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    result
}

fn max_entry_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// 1×1 matrix helper.
pub(crate) fn scalar_block(z: Complex64) -> CMatrix {
    CMatrix::from_element(1, 1, z)
}
