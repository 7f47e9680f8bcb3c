//! Idempotent states on `KP_n`: Zhang's four families, their Fourier
//! characterizations, and the central ones.

use std::collections::{BTreeSet, VecDeque};
use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{haar_integral, is_positive, AlgebraElement, AlgebraShape, CMatrix};
use crate::error::{Error, Result};
use crate::fourier::{scalar_block, BlockLabel, FourierProfile, Group};
use crate::sekine::{IrrepLabel, Sekine};

/// Largest `n` accepted by [`enumerate_central_idempotents`].
pub const ENUMERATION_CAP: usize = 24;

/// Default number of random probes for centrality checks.
pub const DEFAULT_PROBES: usize = 50;

const PROBE_SEED: u64 = 0x5EC1_17E5;

/// A subgroup of `Z_n × Z_n`, stored by its sorted element list and the
/// Hermite-normal-form generators `(a, b)`, `(0, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    n: usize,
    generators: [(usize, usize); 2],
    elements: Vec<(usize, usize)>,
}

impl Subgroup {
    /// The subgroup generated by `gens`.
    pub fn generated_by(n: usize, gens: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        let gens: Vec<_> = gens.iter().map(|&(i, j)| (i % n, j % n)).collect();
        let mut seen = BTreeSet::from([(0, 0)]);
        let mut queue = VecDeque::from([(0, 0)]);
        while let Some((i, j)) = queue.pop_front() {
            for &(gi, gj) in &gens {
                let next = ((i + gi) % n, (j + gj) % n);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        Ok(Self::from_closed_set(n, seen))
    }

    /// Accepts `elements` only if they already form a subgroup.
    pub fn from_elements(
        n: usize,
        elements: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let set: BTreeSet<_> = elements.into_iter().map(|(i, j)| (i % n, j % n)).collect();
        if !set.contains(&(0, 0)) {
            return Err(Error::InvalidSpec(
                "subset does not contain the identity".into(),
            ));
        }
        for &(a, b) in &set {
            for &(c, d) in &set {
                if !set.contains(&((a + c) % n, (b + d) % n)) {
                    return Err(Error::InvalidSpec(format!(
                        "subset is not closed: ({a},{b}) + ({c},{d}) is missing"
                    )));
                }
            }
        }
        Ok(Self::from_closed_set(n, set))
    }

    fn from_closed_set(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let a = (1..=n)
            .find(|&s| set.iter().any(|&(i, _)| i == s % n))
            .unwrap_or(n);
        let d = (1..=n).find(|&t| set.contains(&(0, t % n))).unwrap_or(n);
        let b = (0..n).find(|&t| set.contains(&(a % n, t))).unwrap_or(0);
        Self {
            n,
            generators: [(a % n, b), (0, d % n)],
            elements: set.into_iter().collect(),
        }
    }

    /// All subgroups of `Z_n × Z_n`, one per Hermite normal form
    /// `⟨(a, b), (0, d)⟩` with `a | n`, `d | n`, `0 ≤ b < d` and `d | (n/a)·b`.
    pub fn all(n: usize) -> Vec<Subgroup> {
        let divisors = divisors(n);
        let mut out = Vec::new();
        for &a in &divisors {
            for &d in &divisors {
                for b in 0..d {
                    if ((n / a) * b).is_multiple_of(d) {
                        let g = Self::generated_by(n, &[(a, b), (0, d)]).expect("n > 0");
                        out.push(g);
                    }
                }
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[(usize, usize)] {
        &self.elements
    }

    pub fn generators(&self) -> [(usize, usize); 2] {
        self.generators
    }

    pub fn contains(&self, (i, j): (usize, usize)) -> bool {
        self.elements
            .binary_search(&(i % self.n, j % self.n))
            .is_ok()
    }

    /// `(k, l) ∈ Γ ⇔ (k, −l) ∈ Γ`.
    pub fn is_reflection_symmetric(&self) -> bool {
        let n = self.n;
        self.elements
            .iter()
            .all(|&(k, l)| self.contains((k, (n - l) % n)))
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [(a, b), (c, d)] = self.generators;
        write!(f, "<({a},{b}),({c},{d})> of order {}", self.order())
    }
}

/// Signs `τ_j`, `j ∈ qZ_n`, stored by `r = j / q ∈ Z_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    entries: Vec<i8>,
}

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSpec("empty sign vector".into()));
        }
        if let Some(bad) = entries.iter().find(|e| e.abs() != 1) {
            return Err(Error::InvalidSpec(format!(
                "sign vector entry {bad} is not ±1"
            )));
        }
        Ok(Self { entries })
    }

    pub fn constant(p: usize) -> Self {
        Self {
            entries: vec![1; p],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    /// `τ_{q r}` for any integer `r`, read modulo `p`.
    pub fn at(&self, r: i64) -> f64 {
        self.entries[r.rem_euclid(self.entries.len() as i64) as usize] as f64
    }

    /// `S_i = Σ_r τ_r e^{2πi·ir/p}` for `i ∈ Z_p`.
    pub fn transform(&self) -> Vec<Complex64> {
        let p = self.entries.len();
        (0..p)
            .map(|i| {
                (0..p)
                    .map(|r| {
                        let phase = 2.0 * PI * ((i * r) % p) as f64 / p as f64;
                        Complex64::from_polar(self.entries[r] as f64, phase)
                    })
                    .sum()
            })
            .collect()
    }

    /// Every `S_i` real and nonnegative within `tol`.
    pub fn check_positivity(&self, tol: f64) -> Result<()> {
        for (i, s) in self.transform().into_iter().enumerate() {
            if s.im.abs() > tol || s.re < -tol {
                return Err(Error::InvalidSpec(format!(
                    "sign vector {:?} fails positivity at i = {i}: sum = {s}",
                    self.entries
                )));
            }
        }
        Ok(())
    }

    /// All sign vectors of length `p` passing the positivity check.
    pub fn enumerate(p: usize, tol: f64) -> Vec<SignVector> {
        // A real transform forces τ_r = τ_{−r}, and a nonnegative one forces τ_0 = 1,
        // so only the free half r = 1..=⌊p/2⌋ is enumerated.
        let free = p / 2;
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << free) {
            let mut entries = vec![1i8; p];
            for r in 1..=free {
                if mask >> (r - 1) & 1 == 1 {
                    entries[r] = -1;
                    entries[(p - r) % p] = -1;
                }
            }
            let tau = SignVector { entries };
            if tau.check_positivity(tol).is_ok() {
                out.push(tau);
            }
        }
        out
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(if *e > 0 { "+" } else { "-" })?;
        }
        f.write_str(")")
    }
}

/// A named idempotent state.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdempotentSpec {
    Haar,
    HGamma(Subgroup),
    HGammaL {
        q: usize,
        l: usize,
    },
    HGammaLTau {
        p: usize,
        q: usize,
        l: usize,
        tau: SignVector,
    },
    /// Pal's idempotent `φ_i` on `KP`, `i ∈ 1..=8`.
    Pal(u8),
}

impl fmt::Display for IdempotentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdempotentSpec::Haar => f.write_str("Haar"),
            IdempotentSpec::HGamma(g) => write!(f, "h_Gamma, Gamma = {g}"),
            IdempotentSpec::HGammaL { q, l } => write!(f, "h_Gamma,l (q = {q}, l = {l})"),
            IdempotentSpec::HGammaLTau { p, q, l, tau } => {
                write!(f, "h_Gamma,l,tau (p = {p}, q = {q}, l = {l}, tau = {tau})")
            }
            IdempotentSpec::Pal(i) => write!(f, "phi_{i}"),
        }
    }
}

impl IdempotentSpec {
    /// Checks the spec against `n` with the default tolerance for `τ`.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            IdempotentSpec::Haar => Ok(()),
            IdempotentSpec::HGamma(g) if g.n() != n => Err(Error::InvalidSpec(format!(
                "subgroup of Z_{} used with n = {n}",
                g.n()
            ))),
            IdempotentSpec::HGamma(_) => Ok(()),
            IdempotentSpec::HGammaL { q, l } => {
                if *q < 2 || !n.is_multiple_of(*q) {
                    return Err(Error::InvalidSpec(format!(
                        "q = {q} must be a divisor of {n} above 1"
                    )));
                }
                if l >= q {
                    return Err(Error::InvalidSpec(format!("l = {l} must lie in Z_{q}")));
                }
                Ok(())
            }
            IdempotentSpec::HGammaLTau { p, q, l, tau } => {
                if *p < 2 || p * q != n {
                    return Err(Error::InvalidSpec(format!(
                        "need p > 1 and p·q = {n}, got p = {p}, q = {q}"
                    )));
                }
                if l >= q {
                    return Err(Error::InvalidSpec(format!("l = {l} must lie in Z_{q}")));
                }
                if tau.len() != *p {
                    return Err(Error::InvalidSpec(format!(
                        "sign vector has {} entries, expected p = {p}",
                        tau.len()
                    )));
                }
                tau.check_positivity(crate::algebra::DEFAULT_TOL)
            }
            IdempotentSpec::Pal(_) => Err(Error::InvalidSpec(
                "Pal's idempotents live on KP, not on KP_n".into(),
            )),
        }
    }
}

/// The element `x` with `F(x)` equal to the named idempotent state on `KP_n`.
pub fn build_idempotent(spec: &IdempotentSpec, n: usize) -> Result<AlgebraElement> {
    spec.validate(n)?;
    let shape = AlgebraShape::sekine(n);
    let nf = n as f64;
    let idx = |i: usize, j: usize| (i % n) * n + j % n;
    let mut x = AlgebraElement::zero(shape);
    match spec {
        IdempotentSpec::Haar => return Ok(AlgebraElement::unit(shape)),
        IdempotentSpec::HGamma(g) => {
            let w = Complex64::new(2.0 * nf * nf / g.order() as f64, 0.0);
            for &(i, j) in g.elements() {
                x.abelian_mut()[idx(i, j)] = w;
            }
        }
        IdempotentSpec::HGammaL { q, l } => {
            let w = Complex64::new(*q as f64, 0.0);
            for i in 0..n {
                for j in (0..n).step_by(*q) {
                    x.abelian_mut()[idx(i, j)] = w;
                }
            }
            for r in 0..n {
                if (r + 1) % q == *l {
                    x.matrix_mut()[(r, r)] = w;
                }
            }
        }
        IdempotentSpec::HGammaLTau { p, q, l, tau } => {
            let w = Complex64::new(nf, 0.0);
            for i in (0..n).step_by(*p) {
                for j in (0..n).step_by(*q) {
                    x.abelian_mut()[idx(i, j)] = w;
                }
            }
            for r in 0..n {
                for c in 0..n {
                    if (r + 1) % q == *l && (c + 1) % q == *l {
                        let offset = ((c + n - r) % n) / q;
                        x.matrix_mut()[(r, c)] =
                            Complex64::new(*q as f64 * tau.at(offset as i64), 0.0);
                    }
                }
            }
        }
        IdempotentSpec::Pal(_) => unreachable!("rejected by validate"),
    }
    Ok(x)
}

/// Fills in the one-dimensional values from the composite blocks
/// `X_{u,0} ≅ ρ_u^+ ⊕ ρ_u^-` and `X_{u,n/2} ≅ σ_u^+ ⊕ σ_u^-`.
pub(crate) fn complete_profile(n: usize, x_blocks: Vec<(BlockLabel, CMatrix)>) -> FourierProfile {
    let find = |u: usize, v: usize| {
        x_blocks
            .iter()
            .find(|(l, _)| *l == BlockLabel::X { u, v })
            .map(|(_, m)| (m[(0, 0)], m[(0, 1)]))
            .expect("composite block present")
    };
    let mut one_dim = Vec::new();
    let sekine = Sekine::new(n).expect("n >= 2");
    for label in sekine.one_dim_labels() {
        let value = match label {
            IrrepLabel::RhoPlus(l) => {
                let (d, o) = find(l, 0);
                d + o
            }
            IrrepLabel::RhoMinus(l) => {
                let (d, o) = find(l, 0);
                d - o
            }
            IrrepLabel::SigmaPlus(l) => {
                let (d, o) = find(l, n / 2);
                d + o
            }
            IrrepLabel::SigmaMinus(l) => {
                let (d, o) = find(l, n / 2);
                d - o
            }
            IrrepLabel::X(..) => unreachable!(),
        };
        one_dim.push((BlockLabel::OneDim(label), scalar_block(value)));
    }
    let mut blocks = x_blocks;
    blocks.extend(one_dim);
    FourierProfile::new(Group::Sekine(n), blocks)
}

/// The Fourier profile of an idempotent state from the closed-form block
/// characterization; `Haar` and `HGamma` go through their elements.
pub fn idempotent_profile(spec: &IdempotentSpec, n: usize) -> Result<FourierProfile> {
    spec.validate(n)?;
    let sekine = Sekine::new(n)?;
    let (p, q, l, tau) = match spec {
        IdempotentSpec::HGammaL { q, l } => (n / q, *q, *l, None),
        IdempotentSpec::HGammaLTau { p, q, l, tau } => (*p, *q, *l, Some(tau)),
        _ => return sekine.fourier_profile(&build_idempotent(spec, n)?),
    };
    let half = Complex64::new(0.5, 0.0);
    let mut blocks = Vec::new();
    for u in 0..n {
        for v in 0..=n / 2 {
            let u_ok = match tau {
                None => u == 0,
                Some(_) => u % q == 0,
            };
            let block = if u_ok && v % p == 0 {
                let t = tau.map_or(1.0, |t| t.at(-((u / q) as i64)));
                let up = sekine.eta_pow((l * v) as i64) * t;
                let down = sekine.eta_pow(-((l * v) as i64)) * t;
                CMatrix::from_row_slice(2, 2, &[half, up * half, down * half, half])
            } else {
                CMatrix::zeros(2, 2)
            };
            blocks.push((BlockLabel::X { u, v }, block));
        }
    }
    Ok(complete_profile(n, blocks))
}

/// Projector profile, unit mass and positivity. The group is inferred from
/// the shape of `x`; `C(KP_2)` and `C(KP)` share a shape, which resolves to
/// `KP`, so use [`is_idempotent_state_on`] for `KP_2`.
pub fn is_idempotent_state(x: &AlgebraElement, tol: f64) -> Result<bool> {
    is_idempotent_state_on(Group::of(x)?, x, tol)
}

pub fn is_idempotent_state_on(group: Group, x: &AlgebraElement, tol: f64) -> Result<bool> {
    let profile = group.fourier_profile(x)?;
    Ok(profile.is_idempotent(tol)
        && (haar_integral(x) - Complex64::new(1.0, 0.0)).norm() <= tol
        && is_positive(x, tol))
}

/// Random probe functionals for centrality tests, generated once from a
/// fixed seed so repeated checks are deterministic.
#[derive(Clone, Debug)]
pub struct CentralityProbe {
    group: Group,
    profiles: Vec<FourierProfile>,
}

impl CentralityProbe {
    pub fn new(group: Group, trials: usize) -> Result<Self> {
        Self::with_seed(group, trials, PROBE_SEED)
    }

    pub fn with_seed(group: Group, trials: usize, seed: u64) -> Result<Self> {
        let shape = match group {
            Group::KacPaljutkin => AlgebraShape::kac_paljutkin(),
            Group::Sekine(n) => AlgebraShape::sekine(n),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut profiles = Vec::with_capacity(trials);
        for _ in 0..trials {
            let y = random_element(shape, &mut rng);
            profiles.push(group.fourier_profile(&y)?);
        }
        Ok(Self { group, profiles })
    }

    pub fn group(&self) -> Group {
        self.group
    }

    /// Largest blockwise commutator between `F(x)` and the probes.
    pub fn max_commutator(&self, x: &AlgebraElement) -> Result<f64> {
        let px = self.group.fourier_profile(x)?;
        let mut worst: f64 = 0.0;
        for py in &self.profiles {
            worst = worst.max(px.commutator_defect(py)?);
        }
        Ok(worst)
    }

    pub fn is_central(&self, x: &AlgebraElement, tol: f64) -> Result<bool> {
        Ok(self.max_commutator(x)? <= tol)
    }
}

fn random_element(shape: AlgebraShape, rng: &mut impl Rng) -> AlgebraElement {
    let mut c = || Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    let abelian = (0..shape.abelian_dim()).map(|_| c()).collect();
    let m = shape.matrix_dim();
    let matrix = CMatrix::from_fn(m, m, |_, _| c());
    AlgebraElement::new(shape, abelian, matrix).expect("shape-consistent")
}

/// Whether `F(x)` commutes with `F(y)` for `trials` random `y`. The group
/// is inferred as in [`is_idempotent_state`].
pub fn is_central_functional(x: &AlgebraElement, trials: usize, tol: f64) -> Result<bool> {
    is_central_functional_on(Group::of(x)?, x, trials, tol)
}

pub fn is_central_functional_on(
    group: Group,
    x: &AlgebraElement,
    trials: usize,
    tol: f64,
) -> Result<bool> {
    CentralityProbe::new(group, trials)?.is_central(x, tol)
}

/// A central idempotent together with the outcome of its checks.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifiedIdempotent {
    pub spec: IdempotentSpec,
    pub idempotent: bool,
    pub central: bool,
}

/// Every idempotent spec for `KP_n`, before any centrality filtering.
pub fn enumerate_idempotents(n: usize) -> Result<Vec<IdempotentSpec>> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    Sekine::new(n)?;
    let mut specs = vec![IdempotentSpec::Haar];
    specs.extend(Subgroup::all(n).into_iter().map(IdempotentSpec::HGamma));
    for q in divisors(n) {
        if q > 1 {
            specs.extend((0..q).map(|l| IdempotentSpec::HGammaL { q, l }));
        }
        let p = n / q;
        if p > 1 {
            for tau in SignVector::enumerate(p, crate::algebra::DEFAULT_TOL) {
                specs.extend((0..q).map(|l| IdempotentSpec::HGammaLTau {
                    p,
                    q,
                    l,
                    tau: tau.clone(),
                }));
            }
        }
    }
    Ok(specs)
}

/// All central idempotent states of `KP_n`, deduplicated by their elements.
pub fn enumerate_central_idempotents(n: usize) -> Result<Vec<IdempotentSpec>> {
    Ok(verify_central_idempotents(n, DEFAULT_PROBES, 1e-9)?
        .into_iter()
        .map(|v| v.spec)
        .collect())
}

/// As [`enumerate_central_idempotents`], keeping the verification flags.
pub fn verify_central_idempotents(
    n: usize,
    trials: usize,
    tol: f64,
) -> Result<Vec<VerifiedIdempotent>> {
    let probe = CentralityProbe::new(Group::Sekine(n), trials)?;
    let mut kept: Vec<(AlgebraElement, VerifiedIdempotent)> = Vec::new();
    for spec in enumerate_idempotents(n)? {
        let x = build_idempotent(&spec, n)?;
        if !probe.is_central(&x, tol)? {
            continue;
        }
        let duplicate = kept
            .iter()
            .any(|(y, _)| x.max_abs_diff(y).is_ok_and(|d| d <= 1e-10));
        if duplicate {
            continue;
        }
        let idempotent = is_idempotent_state_on(Group::Sekine(n), &x, tol)?;
        kept.push((
            x,
            VerifiedIdempotent {
                spec,
                idempotent,
                central: true,
            },
        ));
    }
    Ok(kept.into_iter().map(|(_, v)| v).collect())
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_TOL;

    #[test]
    fn subgroup_counts() {
        // Number of subgroups of Z_n²: 5 for n = 2, 6 for n = 3, 15 for n = 4, 30 for n = 6.
        for (n, count) in [(2, 5), (3, 6), (4, 15), (5, 8), (6, 30)] {
            let all = Subgroup::all(n);
            assert_eq!(all.len(), count, "n = {n}");
            let unique: BTreeSet<_> = all.iter().map(|g| g.elements().to_vec()).collect();
            assert_eq!(unique.len(), count);
            for g in &all {
                assert!(Subgroup::from_elements(n, g.elements().iter().copied()).is_ok());
                assert_eq!(n * n % g.order(), 0);
            }
        }
    }

    #[test]
    fn subgroup_rejects_non_closed_sets() {
        assert!(Subgroup::from_elements(4, [(0, 0), (1, 0)]).is_err());
        assert!(Subgroup::from_elements(4, [(1, 0)]).is_err());
        let g = Subgroup::generated_by(6, &[(2, 3)]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_reflection_symmetric());
        let h = Subgroup::generated_by(5, &[(1, 1)]).unwrap();
        assert!(!h.is_reflection_symmetric());
    }

    #[test]
    fn sign_vectors() {
        assert!(SignVector::new(vec![1, 0]).is_err());
        assert!(SignVector::constant(5)
            .check_positivity(DEFAULT_TOL)
            .is_ok());
        assert!(SignVector::new(vec![1, -1, -1])
            .unwrap()
            .check_positivity(DEFAULT_TOL)
            .is_err());
        let all = SignVector::enumerate(4, DEFAULT_TOL);
        assert!(all.contains(&SignVector::new(vec![1, 1, 1, 1]).unwrap()));
        assert!(all.contains(&SignVector::new(vec![1, -1, 1, -1]).unwrap()));
        for tau in &all {
            assert!(tau.check_positivity(DEFAULT_TOL).is_ok());
        }
    }

    #[test]
    fn spec_validation() {
        assert!(IdempotentSpec::HGammaL { q: 2, l: 0 }.validate(3).is_err());
        assert!(IdempotentSpec::HGammaL { q: 3, l: 3 }.validate(6).is_err());
        assert!(IdempotentSpec::HGammaL { q: 1, l: 0 }.validate(6).is_err());
        let bad_tau = IdempotentSpec::HGammaLTau {
            p: 3,
            q: 1,
            l: 0,
            tau: SignVector::new(vec![1, -1, -1]).unwrap(),
        };
        assert!(build_idempotent(&bad_tau, 3).is_err());
        assert!(build_idempotent(&IdempotentSpec::Pal(1), 4).is_err());
    }

    #[test]
    fn build_examples() {
        let n = 4;
        let whole = Subgroup::generated_by(n, &[(1, 0), (0, 1)]).unwrap();
        let x = build_idempotent(&IdempotentSpec::HGamma(whole), n).unwrap();
        assert!(x
            .abelian()
            .iter()
            .all(|z| (z - Complex64::new(2.0, 0.0)).norm() < 1e-15));
        assert!((haar_integral(&x) - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        let haar = build_idempotent(&IdempotentSpec::Haar, n).unwrap();
        assert_eq!(haar, AlgebraElement::unit(AlgebraShape::sekine(n)));
    }

    #[test]
    fn built_idempotents_are_idempotent_states() {
        for n in 2..=8 {
            for spec in enumerate_idempotents(n).unwrap() {
                let x = build_idempotent(&spec, n).unwrap();
                assert!(
                    is_idempotent_state_on(Group::Sekine(n), &x, 1e-10).unwrap(),
                    "n = {n}, {spec}"
                );
            }
        }
        let two = AlgebraElement::unit(AlgebraShape::sekine(3)).scale(Complex64::new(2.0, 0.0));
        assert!(!is_idempotent_state(&two, 1e-10).unwrap());
    }

    #[test]
    fn closed_form_profiles_match_elements() {
        for n in 2..=10 {
            let sekine = Sekine::new(n).unwrap();
            for spec in enumerate_idempotents(n).unwrap() {
                if !matches!(
                    spec,
                    IdempotentSpec::HGammaL { .. } | IdempotentSpec::HGammaLTau { .. }
                ) {
                    continue;
                }
                let direct = sekine
                    .fourier_profile(&build_idempotent(&spec, n).unwrap())
                    .unwrap();
                let closed = idempotent_profile(&spec, n).unwrap();
                let dev = direct.max_deviation(&closed).unwrap();
                assert!(dev < 1e-10, "n = {n}, {spec}: {dev}");
            }
        }
    }

    #[test]
    fn centrality_examples() {
        let n = 5;
        let tau = IdempotentSpec::HGammaLTau {
            p: n,
            q: 1,
            l: 0,
            tau: SignVector::constant(n),
        };
        let x = build_idempotent(&tau, n).unwrap();
        assert!(is_central_functional(&x, 20, 1e-9).unwrap());
        let shape = AlgebraShape::sekine(n);
        let point = AlgebraElement::abelian_unit(shape, 1).scale(Complex64::new(50.0, 0.0));
        assert!(!is_central_functional(&point, 20, 1e-9).unwrap());
    }

    #[test]
    fn small_central_lists() {
        let two = enumerate_central_idempotents(2).unwrap();
        assert!(two.contains(&IdempotentSpec::Haar));
        assert!(two.contains(&IdempotentSpec::HGammaL { q: 2, l: 0 }));
        assert!(two.contains(&IdempotentSpec::HGammaL { q: 2, l: 1 }));
        let gammas = two
            .iter()
            .filter(|s| matches!(s, IdempotentSpec::HGamma(_)))
            .count();
        assert_eq!(gammas, 5);
        let three = enumerate_central_idempotents(3).unwrap();
        assert!(!three
            .iter()
            .any(|s| matches!(s, IdempotentSpec::HGammaL { q: 2, .. })));
        assert!(matches!(
            enumerate_central_idempotents(25),
            Err(Error::CapExceeded { .. })
        ));
    }
}
