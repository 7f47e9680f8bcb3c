//! Representation theory of the Sekine quantum groups `KP_n`.
//!
//! Abelian coordinates `e_(i,j)` are indexed zero-based by `(i, j) ∈ Z_n × Z_n`
//! and stored row-major (`i * n + j`). Matrix rows and columns are zero-based in
//! storage; the one-based row number `m = r + 1` enters wherever a sign
//! `(-1)^m` or a phase `η^{mv}` appears.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::algebra::{
    is_hermitian, min_hermitian_eigenvalue, AlgebraElement, AlgebraShape, CMatrix,
};
use crate::error::{Error, Result};
use crate::fourier::{scalar_block, BlockLabel, FourierProfile, Group};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// An irreducible representation of `KP_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IrrepLabel {
    RhoPlus(usize),
    RhoMinus(usize),
    /// Even `n` only.
    SigmaPlus(usize),
    /// Even `n` only.
    SigmaMinus(usize),
    /// Two-dimensional, `v ∈ {1, …, ⌊(n−1)/2⌋}`.
    X(usize, usize),
}

impl IrrepLabel {
    pub const TRIVIAL: IrrepLabel = IrrepLabel::RhoPlus(0);

    pub fn dim(&self) -> usize {
        match self {
            IrrepLabel::X(..) => 2,
            _ => 1,
        }
    }

    pub fn is_trivial(&self) -> bool {
        *self == Self::TRIVIAL
    }

    /// The contragredient label: `χ_α^* = χ_{inverse(α)}`.
    pub fn inverse(&self, n: usize) -> IrrepLabel {
        let neg = |l: usize| (n - l % n) % n;
        match *self {
            IrrepLabel::RhoPlus(l) => IrrepLabel::RhoPlus(neg(l)),
            IrrepLabel::RhoMinus(l) => IrrepLabel::RhoMinus(neg(l)),
            IrrepLabel::SigmaPlus(l) if l % 2 == 0 => IrrepLabel::SigmaPlus(neg(l)),
            IrrepLabel::SigmaPlus(l) => IrrepLabel::SigmaMinus(neg(l)),
            IrrepLabel::SigmaMinus(l) if l % 2 == 0 => IrrepLabel::SigmaMinus(neg(l)),
            IrrepLabel::SigmaMinus(l) => IrrepLabel::SigmaPlus(neg(l)),
            IrrepLabel::X(u, v) => IrrepLabel::X(neg(u), v),
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::RhoPlus(l) => write!(f, "rho+:{l}"),
            IrrepLabel::RhoMinus(l) => write!(f, "rho-:{l}"),
            IrrepLabel::SigmaPlus(l) => write!(f, "sigma+:{l}"),
            IrrepLabel::SigmaMinus(l) => write!(f, "sigma-:{l}"),
            IrrepLabel::X(u, v) => write!(f, "X:{u},{v}"),
        }
    }
}

impl FromStr for IrrepLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::LabelSyntax(format!("{s:?}: {reason}"));
        let (head, rest) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let index = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| bad("index is not a nonnegative integer"))
        };
        match head.trim() {
            "rho+" => Ok(IrrepLabel::RhoPlus(index(rest)?)),
            "rho-" => Ok(IrrepLabel::RhoMinus(index(rest)?)),
            "sigma+" => Ok(IrrepLabel::SigmaPlus(index(rest)?)),
            "sigma-" => Ok(IrrepLabel::SigmaMinus(index(rest)?)),
            "X" => {
                let (u, v) = rest.split_once(',').ok_or_else(|| bad("expected X:u,v"))?;
                Ok(IrrepLabel::X(index(u)?, index(v)?))
            }
            _ => Err(bad("unknown representation")),
        }
    }
}

/// `a = Σ a_α χ_α`; labels absent from the map have coefficient zero.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralElement {
    n: usize,
    coeffs: BTreeMap<IrrepLabel, Complex64>,
}

impl CentralElement {
    pub fn zero(n: usize) -> Result<Self> {
        Sekine::check_n(n)?;
        Ok(Self {
            n,
            coeffs: BTreeMap::new(),
        })
    }

    /// Coefficients of the unit; `F` of it is the Haar state.
    pub fn unit(n: usize) -> Result<Self> {
        Self::new(n, [(IrrepLabel::TRIVIAL, ONE)])
    }

    pub fn new(
        n: usize,
        coeffs: impl IntoIterator<Item = (IrrepLabel, Complex64)>,
    ) -> Result<Self> {
        let mut a = Self::zero(n)?;
        for (label, value) in coeffs {
            a.set(label, value)?;
        }
        Ok(a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, label: IrrepLabel) -> Complex64 {
        self.coeffs.get(&label).copied().unwrap_or(ZERO)
    }

    pub fn set(&mut self, label: IrrepLabel, value: Complex64) -> Result<()> {
        check_label(self.n, label)?;
        self.coeffs.insert(label, value);
        Ok(())
    }

    /// Stored coefficients in label order.
    pub fn iter(&self) -> impl Iterator<Item = (IrrepLabel, Complex64)> + '_ {
        self.coeffs.iter().map(|(l, z)| (*l, *z))
    }

    /// `a_α / d_α`.
    pub fn ratio(&self, label: IrrepLabel) -> Complex64 {
        self.get(label) / label.dim() as f64
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .keys()
            .chain(other.coeffs.keys())
            .map(|l| (self.get(*l) - other.get(*l)).norm())
            .fold(0.0, f64::max)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateCondition {
    Normalization,
    NonRealCoefficient,
    NegativeCoefficient,
    MatrixNotHermitian,
    MatrixNotPsd,
}

impl fmt::Display for StateCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StateCondition::Normalization => "normalization",
            StateCondition::NonRealCoefficient => "non-real abelian coefficient",
            StateCondition::NegativeCoefficient => "negative abelian coefficient",
            StateCondition::MatrixNotHermitian => "matrix block not Hermitian",
            StateCondition::MatrixNotPsd => "matrix block not positive semidefinite",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateFailure {
    pub condition: StateCondition,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct StateReport {
    pub is_state: bool,
    pub failures: Vec<StateFailure>,
}

impl StateReport {
    pub fn from_failures(failures: Vec<StateFailure>) -> Self {
        Self {
            is_state: failures.is_empty(),
            failures,
        }
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_state {
            Ok(())
        } else {
            Err(Error::NotAState(self))
        }
    }
}

impl fmt::Display for StateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_state {
            return f.write_str("state");
        }
        const SHOWN: usize = 5;
        for (i, fail) in self.failures.iter().take(SHOWN).enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} ({})", fail.condition, fail.witness)?;
        }
        if self.failures.len() > SHOWN {
            write!(f, "; and {} more", self.failures.len() - SHOWN)?;
        }
        Ok(())
    }
}

/// Validates a label against `n`.
pub fn check_label(n: usize, label: IrrepLabel) -> Result<()> {
    let fail = |reason: String| {
        Err(Error::InvalidLabel {
            label: label.to_string(),
            n,
            reason,
        })
    };
    match label {
        IrrepLabel::RhoPlus(l) | IrrepLabel::RhoMinus(l) if l >= n => {
            fail(format!("index must lie in 0..{n}"))
        }
        IrrepLabel::SigmaPlus(_) | IrrepLabel::SigmaMinus(_) if n % 2 == 1 => {
            fail("sigma representations exist only for even n".into())
        }
        IrrepLabel::SigmaPlus(l) | IrrepLabel::SigmaMinus(l) if l >= n => {
            fail(format!("index must lie in 0..{n}"))
        }
        IrrepLabel::X(u, _) if u >= n => fail(format!("u must lie in 0..{n}")),
        IrrepLabel::X(_, v) if v == 0 || v > (n - 1) / 2 => {
            fail(format!("v must lie in 1..={}", (n - 1) / 2))
        }
        _ => Ok(()),
    }
}

/// The character table and Fourier calculus of `KP_n` for one fixed `n`.
#[derive(Clone, Debug)]
pub struct Sekine {
    n: usize,
    shape: AlgebraShape,
    eta: Vec<Complex64>,
}

impl Sekine {
    fn check_n(n: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "KP_n needs n >= 2, got {n}"
            )));
        }
        Ok(())
    }

    pub fn new(n: usize) -> Result<Self> {
        Self::check_n(n)?;
        let eta = (0..n)
            .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64))
            .collect();
        Ok(Self {
            n,
            shape: AlgebraShape::sekine(n),
            eta,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> AlgebraShape {
        self.shape
    }

    pub fn is_even(&self) -> bool {
        self.n.is_multiple_of(2)
    }

    /// `η^k` with `η = e^{2πi/n}`, reduced by index arithmetic.
    pub fn eta_pow(&self, k: i64) -> Complex64 {
        self.eta[k.rem_euclid(self.n as i64) as usize]
    }

    /// `cos(2πk/n)`, exact on the table.
    fn cos(&self, k: usize) -> f64 {
        self.eta[k % self.n].re
    }

    /// Every irrep label, in a fixed order: `ρ^+`, `ρ^-`, `σ^+`, `σ^-`, then `X(u, v)`.
    pub fn labels(&self) -> Vec<IrrepLabel> {
        let n = self.n;
        let mut out: Vec<IrrepLabel> = (0..n).map(IrrepLabel::RhoPlus).collect();
        out.extend((0..n).map(IrrepLabel::RhoMinus));
        if self.is_even() {
            out.extend((0..n).map(IrrepLabel::SigmaPlus));
            out.extend((0..n).map(IrrepLabel::SigmaMinus));
        }
        for u in 0..n {
            for v in 1..=(n - 1) / 2 {
                out.push(IrrepLabel::X(u, v));
            }
        }
        out
    }

    pub fn one_dim_labels(&self) -> Vec<IrrepLabel> {
        self.labels().into_iter().filter(|l| l.dim() == 1).collect()
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        (i % self.n) * self.n + j % self.n
    }

    fn check_shape(&self, x: &AlgebraElement) -> Result<()> {
        if x.shape() != self.shape {
            return Err(Error::ShapeMismatch(format!(
                "element does not live in C(KP_{})",
                self.n
            )));
        }
        Ok(())
    }

    fn check_same_n(&self, a: &CentralElement) -> Result<()> {
        if a.n != self.n {
            return Err(Error::ShapeMismatch(format!(
                "coefficients for n = {} used with n = {}",
                a.n, self.n
            )));
        }
        Ok(())
    }

    /// `(-1)^m` for the one-based row `m = r + 1`.
    fn row_sign(r: usize) -> f64 {
        if r.is_multiple_of(2) {
            -1.0
        } else {
            1.0
        }
    }

    pub fn character(&self, label: IrrepLabel) -> Result<AlgebraElement> {
        check_label(self.n, label)?;
        let n = self.n;
        let mut x = AlgebraElement::zero(self.shape);
        let (l, sign, sigma) = match label {
            IrrepLabel::RhoPlus(l) => (l, 1.0, false),
            IrrepLabel::RhoMinus(l) => (l, -1.0, false),
            IrrepLabel::SigmaPlus(l) => (l, 1.0, true),
            IrrepLabel::SigmaMinus(l) => (l, -1.0, true),
            IrrepLabel::X(u, v) => {
                for s in 0..n {
                    for t in 0..n {
                        let w = self.eta_pow((s * u) as i64) * (2.0 * self.cos(t * v));
                        x.abelian_mut()[self.index(s, t)] = w;
                    }
                }
                return Ok(x);
            }
        };
        for i in 0..n {
            for j in 0..n {
                let parity = if sigma && j % 2 == 1 { -1.0 } else { 1.0 };
                x.abelian_mut()[self.index(i, j)] = self.eta_pow((i * l) as i64) * parity;
            }
        }
        for r in 0..n {
            let s = if sigma { Self::row_sign(r) } else { 1.0 };
            x.matrix_mut()[(r, (r + l) % n)] = Complex64::new(sign * s, 0.0);
        }
        Ok(x)
    }

    /// The canonical-basis coordinates of `Σ a_α χ_α`.
    pub fn central_to_element(&self, a: &CentralElement) -> Result<AlgebraElement> {
        self.check_same_n(a)?;
        let n = self.n;
        let even = self.is_even();
        let half = (n - 1) / 2;
        // t[l][j]: the l-th Fourier mode in the first index, before the η^{il} sum.
        let mut t = vec![vec![ZERO; n]; n];
        for (l, row) in t.iter_mut().enumerate() {
            let rho = a.get(IrrepLabel::RhoPlus(l)) + a.get(IrrepLabel::RhoMinus(l));
            let sigma = if even {
                a.get(IrrepLabel::SigmaPlus(l)) + a.get(IrrepLabel::SigmaMinus(l))
            } else {
                ZERO
            };
            let xs: Vec<Complex64> = (1..=half).map(|v| a.get(IrrepLabel::X(l, v))).collect();
            for (j, entry) in row.iter_mut().enumerate() {
                let mut z = rho;
                if even {
                    z += if j % 2 == 0 { sigma } else { -sigma };
                }
                for (k, xv) in xs.iter().enumerate() {
                    z += xv * (2.0 * self.cos(j * (k + 1)));
                }
                *entry = z;
            }
        }
        let mut x = AlgebraElement::zero(self.shape);
        for i in 0..n {
            for j in 0..n {
                let z: Complex64 = t
                    .iter()
                    .enumerate()
                    .map(|(l, row)| row[j] * self.eta_pow((i * l) as i64))
                    .sum();
                x.abelian_mut()[self.index(i, j)] = z;
            }
        }
        for r in 0..n {
            for c in 0..n {
                let l = (c + n - r) % n;
                let mut z = a.get(IrrepLabel::RhoPlus(l)) - a.get(IrrepLabel::RhoMinus(l));
                if even {
                    z += (a.get(IrrepLabel::SigmaPlus(l)) - a.get(IrrepLabel::SigmaMinus(l)))
                        * Self::row_sign(r);
                }
                x.matrix_mut()[(r, c)] = z;
            }
        }
        Ok(x)
    }

    /// Orthogonal projection onto the span of the characters:
    /// `a_α = ∫ χ_α^* x`. Never fails on shape-compatible input.
    pub fn project_central(&self, x: &AlgebraElement) -> Result<CentralElement> {
        self.check_shape(x)?;
        let n = self.n;
        let nf = n as f64;
        let wa = 1.0 / (2.0 * nf * nf);
        let wm = 1.0 / (2.0 * nf);
        // f[l][j] = Σ_i η^{-il} x_(i,j)
        let mut f = vec![vec![ZERO; n]; n];
        for (l, row) in f.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..n)
                    .map(|i| self.eta_pow(-((i * l) as i64)) * x.abelian()[self.index(i, j)])
                    .sum();
            }
        }
        let m = x.matrix();
        let mut a = CentralElement::zero(n)?;
        for l in 0..n {
            // Tr(S_l^* X) = Σ_r X[r, r+l], and its σ-signed variant.
            let diag: Complex64 = (0..n).map(|r| m[(r, (r + l) % n)]).sum();
            let rho_ab: Complex64 = f[l].iter().sum();
            a.coeffs
                .insert(IrrepLabel::RhoPlus(l), rho_ab * wa + diag * wm);
            a.coeffs
                .insert(IrrepLabel::RhoMinus(l), rho_ab * wa - diag * wm);
            if self.is_even() {
                let sdiag: Complex64 = (0..n)
                    .map(|r| m[(r, (r + l) % n)] * Self::row_sign(r))
                    .sum();
                let sig_ab: Complex64 = f[l]
                    .iter()
                    .enumerate()
                    .map(|(j, z)| if j % 2 == 0 { *z } else { -*z })
                    .sum();
                a.coeffs
                    .insert(IrrepLabel::SigmaPlus(l), sig_ab * wa + sdiag * wm);
                a.coeffs
                    .insert(IrrepLabel::SigmaMinus(l), sig_ab * wa - sdiag * wm);
            }
            for v in 1..=(n - 1) / 2 {
                let z: Complex64 = f[l]
                    .iter()
                    .enumerate()
                    .map(|(j, z)| z * (2.0 * self.cos(j * v)))
                    .sum();
                a.coeffs.insert(IrrepLabel::X(l, v), z * wa);
            }
        }
        Ok(a)
    }

    /// Inverts [`Sekine::central_to_element`]; fails when `x` is not in the
    /// span of the characters (Haar-L2 residual above `tol · ‖x‖₂`).
    pub fn element_to_central(&self, x: &AlgebraElement, tol: f64) -> Result<CentralElement> {
        let a = self.project_central(x)?;
        let back = self.central_to_element(&a)?;
        let residual = haar_l2_norm(&x.checked_sub(&back)?);
        if residual > tol * haar_l2_norm(x) {
            return Err(Error::NotCentral { residual });
        }
        Ok(a)
    }

    /// Checks that `F(a)` is a state: `a_{ρ_0^+} = 1`, nonnegative real
    /// abelian coordinates and a positive semidefinite matrix block.
    pub fn validate_state(&self, a: &CentralElement, tol: f64) -> Result<StateReport> {
        let x = self.central_to_element(a)?;
        let mut failures = Vec::new();
        let norm = a.get(IrrepLabel::TRIVIAL);
        if (norm - ONE).norm() > tol {
            failures.push(StateFailure {
                condition: StateCondition::Normalization,
                witness: format!("a_rho+:0 = {norm}"),
            });
        }
        for i in 0..self.n {
            for j in 0..self.n {
                let z = x.abelian()[self.index(i, j)];
                if z.im.abs() > tol {
                    failures.push(StateFailure {
                        condition: StateCondition::NonRealCoefficient,
                        witness: format!("a_({i},{j}) = {z}"),
                    });
                } else if z.re < -tol {
                    failures.push(StateFailure {
                        condition: StateCondition::NegativeCoefficient,
                        witness: format!("a_({i},{j}) = {:.6e}", z.re),
                    });
                }
            }
        }
        if !is_hermitian(x.matrix(), tol) {
            failures.push(StateFailure {
                condition: StateCondition::MatrixNotHermitian,
                witness: "A != A*".into(),
            });
        } else {
            let min = min_hermitian_eigenvalue(x.matrix());
            if min < -tol {
                failures.push(StateFailure {
                    condition: StateCondition::MatrixNotPsd,
                    witness: format!("min eigenvalue {min:.6e}"),
                });
            }
        }
        Ok(StateReport::from_failures(failures))
    }

    fn check_block(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v > self.n / 2 {
            return Err(Error::InvalidParameter(format!(
                "no Fourier block ({u}, {v}) for n = {}",
                self.n
            )));
        }
        Ok(())
    }

    /// `\hat{F(a)}(X_{u,v})` for central `a`, including the composite
    /// blocks `v = 0` (`ρ_u^+ ⊕ ρ_u^-`) and `v = n/2` (`σ_u^+ ⊕ σ_u^-`).
    pub fn fourier_block(&self, a: &CentralElement, u: usize, v: usize) -> Result<CMatrix> {
        self.check_same_n(a)?;
        self.check_block(u, v)?;
        let n = self.n;
        let w = (n - u) % n;
        let half = Complex64::new(0.5, 0.0);
        let composite = |p: Complex64, m: Complex64, sign: f64| {
            let d = (p + m) * half;
            let o = (p - m) * half * sign;
            CMatrix::from_row_slice(2, 2, &[d, o, o, d])
        };
        if v == 0 {
            let p = a.get(IrrepLabel::RhoPlus(w));
            let m = a.get(IrrepLabel::RhoMinus(w));
            Ok(composite(p, m, 1.0))
        } else if 2 * v == n {
            let p = a.get(IrrepLabel::SigmaPlus(w));
            let m = a.get(IrrepLabel::SigmaMinus(w));
            Ok(composite(
                p,
                m,
                if u.is_multiple_of(2) { 1.0 } else { -1.0 },
            ))
        } else {
            let z = a.get(IrrepLabel::X(w, v)) * half;
            Ok(CMatrix::identity(2, 2) * z)
        }
    }

    fn block_keys(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (0..n).flat_map(move |u| (0..=n / 2).map(move |v| (u, v)))
    }

    /// The Fourier profile of `F(x)` for an arbitrary element: every block
    /// `X_{u,v}` with `0 ≤ v ≤ ⌊n/2⌋`, followed by the one-dimensional values.
    pub fn fourier_profile(&self, x: &AlgebraElement) -> Result<FourierProfile> {
        self.check_shape(x)?;
        let n = self.n;
        let nf = n as f64;
        let wa = 1.0 / (2.0 * nf * nf);
        let wm = 1.0 / (2.0 * nf);
        // g[u][t] = Σ_s η^{su} x_(s,t)
        let mut g = vec![vec![ZERO; n]; n];
        for (u, row) in g.iter_mut().enumerate() {
            for (t, entry) in row.iter_mut().enumerate() {
                *entry = (0..n)
                    .map(|s| self.eta_pow((s * u) as i64) * x.abelian()[self.index(s, t)])
                    .sum();
            }
        }
        // d[u][r] = X[r+u, r]
        let m = x.matrix();
        let d: Vec<Vec<Complex64>> = (0..n)
            .map(|u| (0..n).map(|r| m[((r + u) % n, r)]).collect())
            .collect();

        let mut blocks = Vec::new();
        for (u, v) in self.block_keys() {
            let mut ul = ZERO;
            let mut lr = ZERO;
            for (t, z) in g[u].iter().enumerate() {
                ul += z * self.eta_pow((t * v) as i64);
                lr += z * self.eta_pow(-((t * v) as i64));
            }
            let mut ur = ZERO;
            let mut ll = ZERO;
            for (r, z) in d[u].iter().enumerate() {
                ur += z * self.eta_pow(((r + 1) * v) as i64);
                ll += z * self.eta_pow(-(((r + 1) * v) as i64));
            }
            let block = CMatrix::from_row_slice(2, 2, &[ul * wa, ur * wm, ll * wm, lr * wa]);
            blocks.push((BlockLabel::X { u, v }, block));
        }
        for label in self.one_dim_labels() {
            let value = match label {
                IrrepLabel::RhoPlus(l) | IrrepLabel::RhoMinus(l) => {
                    let ab: Complex64 = g[l].iter().sum();
                    let mat: Complex64 = d[l].iter().sum();
                    let s = if matches!(label, IrrepLabel::RhoPlus(_)) {
                        1.0
                    } else {
                        -1.0
                    };
                    ab * wa + mat * wm * s
                }
                IrrepLabel::SigmaPlus(l) | IrrepLabel::SigmaMinus(l) => {
                    let ab: Complex64 = g[l]
                        .iter()
                        .enumerate()
                        .map(|(t, z)| if t % 2 == 0 { *z } else { -*z })
                        .sum();
                    let mat: Complex64 = d[l]
                        .iter()
                        .enumerate()
                        .map(|(r, z)| z * Self::row_sign(r))
                        .sum();
                    let s = if matches!(label, IrrepLabel::SigmaPlus(_)) {
                        1.0
                    } else {
                        -1.0
                    };
                    ab * wa + mat * wm * s
                }
                IrrepLabel::X(..) => unreachable!("one-dimensional labels only"),
            };
            blocks.push((BlockLabel::OneDim(label), scalar_block(value)));
        }
        Ok(FourierProfile::new(Group::Sekine(n), blocks))
    }

    /// The profile of a central element read off its coefficients.
    pub fn central_profile(&self, a: &CentralElement) -> Result<FourierProfile> {
        self.check_same_n(a)?;
        let mut blocks = Vec::new();
        for (u, v) in self.block_keys() {
            blocks.push((BlockLabel::X { u, v }, self.fourier_block(a, u, v)?));
        }
        for label in self.one_dim_labels() {
            let value = a.get(label.inverse(self.n));
            blocks.push((BlockLabel::OneDim(label), scalar_block(value)));
        }
        Ok(FourierProfile::new(Group::Sekine(self.n), blocks))
    }
}

/// `√(∫ x^* x)`.
pub fn haar_l2_norm(x: &AlgebraElement) -> f64 {
    let shape = x.shape();
    let ab: f64 = x.abelian().iter().map(|z| z.norm_sqr()).sum();
    let mat: f64 = x.matrix().iter().map(|z| z.norm_sqr()).sum();
    (shape.abelian_weight() * ab + shape.matrix_weight() * mat).sqrt()
}
