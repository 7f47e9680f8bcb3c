//! Random walks driven by central states on `KP_n`: convolution powers,
//! exact distance to the Haar state, Diaconis–Shahshahani bounds, limit
//! classification and the cosine cut-off harness.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::algebra::{l1_norm, qtv_distance, AlgebraElement};
use crate::dual::EpsilonVector;
use crate::error::{Error, Result};
use crate::idempotents::{build_idempotent, IdempotentSpec, SignVector, Subgroup};
use crate::sekine::{CentralElement, IrrepLabel, Sekine};

/// Largest step count accepted by the walk operations.
pub const MAX_STEPS: u64 = 1_000_000;

/// Distances below this are reported as zero.
pub const CLAMP: f64 = 1e-15;

/// Default tolerance for cycle detection.
pub const CYCLE_TOL: f64 = 1e-8;

pub(crate) fn clamp(x: f64) -> f64 {
    if x.abs() < CLAMP {
        0.0
    } else {
        x
    }
}

pub(crate) fn check_steps(k: u64) -> Result<()> {
    if k > MAX_STEPS {
        return Err(Error::InvalidParameter(format!(
            "k = {k} exceeds the cap {MAX_STEPS}"
        )));
    }
    Ok(())
}

/// `d · r^k` for `r = a / d`, powered in polar form.
pub(crate) fn power_coefficient(a: Complex64, d: f64, k: u64) -> Complex64 {
    if k == 0 {
        return Complex64::new(d, 0.0);
    }
    let r = a / d;
    let modulus = r.norm();
    if modulus == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let kf = k as f64;
    Complex64::from_polar(d * modulus.powf(kf), r.arg() * kf)
}

/// Where `a_α / d_α` sits relative to the unit circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvidenceStatus {
    InsideDisc,
    EqualsOne,
    OnCircle,
    /// Only reachable on the dual, where `a_α / d_α` may exceed 1.
    AboveOne,
}

impl fmt::Display for EvidenceStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvidenceStatus::InsideDisc => "inside",
            EvidenceStatus::EqualsOne => "equals_one",
            EvidenceStatus::OnCircle => "on_circle",
            EvidenceStatus::AboveOne => "above_one",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Evidence {
    pub label: String,
    /// `a_α / d_α`.
    pub ratio: Complex64,
    pub status: EvidenceStatus,
}

pub(crate) fn status_of(label: &str, ratio: Complex64, tol: f64) -> Result<EvidenceStatus> {
    let modulus = ratio.norm();
    if modulus > 1.0 + tol {
        return Err(Error::Ambiguous(format!(
            "|a/d| = {modulus} exceeds 1 at {label}; the coefficients cannot come from a state"
        )));
    }
    Ok(if modulus < 1.0 - tol {
        EvidenceStatus::InsideDisc
    } else if (ratio - Complex64::new(1.0, 0.0)).norm() <= tol {
        EvidenceStatus::EqualsOne
    } else {
        EvidenceStatus::OnCircle
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    ConvergesToHaar,
    ConvergesTo(IdempotentSpec),
    /// Limit of a walk on the dual group, an idempotent in the center of `C(KP_n)`.
    ConvergesToDual(EpsilonVector),
    /// `period` is the asymptotic period when one was detected.
    Diverges {
        period: Option<usize>,
    },
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::ConvergesToHaar => f.write_str("converges to the Haar state"),
            Outcome::ConvergesTo(spec) => write!(f, "converges to {spec}"),
            Outcome::ConvergesToDual(eps) => write!(f, "converges to {eps}"),
            Outcome::Diverges { period: Some(p) } => write!(f, "diverges, cyclic with period {p}"),
            Outcome::Diverges { period: None } => f.write_str("diverges, not cyclic"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitClassification {
    pub outcome: Outcome,
    /// One entry per nontrivial label.
    pub evidence: Vec<Evidence>,
    /// Identifier of the case of the classification theorem that applied.
    pub branch: String,
    pub notes: Vec<String>,
}

/// One recorded step of a walk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StepRecord {
    pub k: u64,
    pub qtv: f64,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WalkReport {
    /// `"kpn"`, `"kp"` or `"kpn-dual"`.
    pub group: String,
    pub n: Option<usize>,
    pub steps: Vec<StepRecord>,
    pub classification: LimitClassification,
    pub cycle: Option<usize>,
}

/// Smallest `p ≤ max_period` with `dist(k, k + p) ≤ tol`, checked at the
/// burn-in step `k`.
pub(crate) fn smallest_period(
    max_period: usize,
    burn_in: u64,
    tol: f64,
    mut dist: impl FnMut(u64, u64) -> Result<f64>,
) -> Result<Option<usize>> {
    for p in 1..=max_period {
        if dist(burn_in, burn_in + p as u64)? <= tol {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Steps needed for `max_inside^k ≤ target`, at least `floor`.
pub(crate) fn burn_in(max_inside: f64, target: f64, floor: u64) -> u64 {
    if max_inside <= 0.0 {
        return floor;
    }
    let k = (target.ln() / max_inside.ln()).ceil();
    if k.is_finite() {
        (k as u64).clamp(floor, MAX_STEPS / 2)
    } else {
        floor
    }
}

/// A validated central state on `KP_n` with its character table.
#[derive(Clone, Debug)]
pub struct Walk {
    sekine: Sekine,
    a: CentralElement,
    tol: f64,
}

impl Walk {
    pub fn new(a: CentralElement, tol: f64) -> Result<Self> {
        let sekine = Sekine::new(a.n())?;
        sekine.validate_state(&a, tol)?.into_result()?;
        Ok(Self { sekine, a, tol })
    }

    pub fn sekine(&self) -> &Sekine {
        &self.sekine
    }

    pub fn state(&self) -> &CentralElement {
        &self.a
    }

    fn nontrivial(&self) -> impl Iterator<Item = IrrepLabel> + '_ {
        self.sekine.labels().into_iter().filter(|l| !l.is_trivial())
    }

    pub fn power(&self, k: u64) -> Result<CentralElement> {
        convolution_power(&self.a, k)
    }

    pub fn power_element(&self, k: u64) -> Result<AlgebraElement> {
        self.sekine.central_to_element(&self.power(k)?)
    }

    pub fn qtv(&self, k: u64) -> Result<f64> {
        let x = self.power_element(k)?;
        let one = AlgebraElement::unit(self.sekine.shape());
        Ok(clamp(qtv_distance(&x, &one)?))
    }

    pub fn ds_upper(&self, k: u64) -> Result<f64> {
        check_steps(k)?;
        let mut sum = 0.0;
        for l in self.nontrivial() {
            let r = self.a.ratio(l).norm();
            let term = r.powf(2.0 * k as f64);
            sum += if l.dim() == 1 { 0.25 * term } else { term };
        }
        Ok(clamp(sum.sqrt()))
    }

    pub fn ds_lower(&self, k: u64) -> Result<f64> {
        check_steps(k)?;
        let m = self
            .nontrivial()
            .map(|l| self.a.ratio(l).norm())
            .fold(0.0, f64::max);
        Ok(clamp(0.5 * m.powf(k as f64)))
    }

    fn evidence(&self) -> Result<Vec<Evidence>> {
        self.nontrivial()
            .map(|l| {
                let ratio = self.a.ratio(l);
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

    fn largest_inside(&self, evidence: &[Evidence]) -> f64 {
        evidence
            .iter()
            .filter(|e| e.status == EvidenceStatus::InsideDisc)
            .map(|e| e.ratio.norm())
            .fold(0.0, f64::max)
    }

    pub fn detect_cycle(&self, max_period: usize, tol: f64) -> Result<Option<usize>> {
        let evidence = self.evidence()?;
        let k0 = burn_in(self.largest_inside(&evidence), 1e-10, max_period as u64);
        let base = self.power_element(k0)?;
        smallest_period(max_period, k0, tol, |_, k| {
            Ok(l1_norm(&self.power_element(k)?.checked_sub(&base)?))
        })
    }

    pub fn classify(&self) -> Result<LimitClassification> {
        let evidence = self.evidence()?;
        let n = self.sekine.n();
        let mut notes = Vec::new();
        if evidence
            .iter()
            .any(|e| e.status == EvidenceStatus::OnCircle)
        {
            let period = self.detect_cycle(2 * n, CYCLE_TOL)?;
            if evidence
                .iter()
                .any(|e| e.status == EvidenceStatus::InsideDisc && e.ratio.norm() > 0.0)
                && period.is_some()
            {
                notes.push(
                    "transient coefficients present: the cycle is reached only asymptotically"
                        .into(),
                );
            }
            return Ok(LimitClassification {
                outcome: Outcome::Diverges { period },
                evidence,
                branch: "diverges".into(),
                notes,
            });
        }
        let ones: Vec<IrrepLabel> = self
            .nontrivial()
            .zip(&evidence)
            .filter(|(_, e)| e.status == EvidenceStatus::EqualsOne)
            .map(|(l, _)| l)
            .collect();
        if ones.is_empty() {
            return Ok(LimitClassification {
                outcome: Outcome::ConvergesToHaar,
                evidence,
                branch: "haar".into(),
                notes,
            });
        }
        let limit = CentralElement::new(
            n,
            std::iter::once((IrrepLabel::TRIVIAL, Complex64::new(1.0, 0.0))).chain(
                ones.iter()
                    .map(|l| (*l, Complex64::new(l.dim() as f64, 0.0))),
            ),
        )?;
        let limit_element = self.sekine.central_to_element(&limit)?;
        let is_one = |l: IrrepLabel| ones.contains(&l);
        let (branch, spec) = if is_one(IrrepLabel::RhoMinus(0)) {
            (
                "h_gamma",
                self.support_subgroup(&limit_element)
                    .map(IdempotentSpec::HGamma),
            )
        } else if n % 2 == 1 {
            ("odd-q1-tau", self.tau_spec(&limit_element, n, 1, 0))
        } else {
            let s0p = is_one(IrrepLabel::SigmaPlus(0));
            let s0m = is_one(IrrepLabel::SigmaMinus(0));
            match (s0p, s0m) {
                (false, false) => ("even-q1-tau", self.tau_spec(&limit_element, n, 1, 0)),
                (true, true) => (
                    "even-both-sigma0",
                    Err(Error::Ambiguous(
                        "a_sigma+:0 = a_sigma-:0 = 1 without a_rho-:0 = 1".into(),
                    )),
                ),
                _ => {
                    let l = if s0p { 0 } else { 1 };
                    let s2 = |plus: bool| {
                        let lab = if plus {
                            IrrepLabel::SigmaPlus(2 % n)
                        } else {
                            IrrepLabel::SigmaMinus(2 % n)
                        };
                        evidence
                            .iter()
                            .find(|e| e.label == lab.to_string())
                            .map(|e| e.status)
                            .unwrap_or(EvidenceStatus::InsideDisc)
                    };
                    if n == 2 {
                        notes.push(
                            "n = 2: sigma_2 coincides with sigma_0; the q = 2 branch degenerates to h_Gamma,l".into(),
                        );
                        (
                            "even-q2-l-degenerate",
                            Ok(IdempotentSpec::HGammaL { q: 2, l }),
                        )
                    } else if s2(true) == EvidenceStatus::InsideDisc
                        && s2(false) == EvidenceStatus::InsideDisc
                    {
                        ("even-q2-l", Ok(IdempotentSpec::HGammaL { q: 2, l }))
                    } else {
                        // Either sign of σ_2 at 1 leaves X_{n−2,n/2} non-null in the limit.
                        ("even-q2-tau", self.tau_spec(&limit_element, n, 2, l))
                    }
                }
            }
        };
        let spec = spec?;
        let built = build_idempotent(&spec, n)?;
        let dev = built.max_abs_diff(&limit_element)?;
        if dev > 1e-8 {
            return Err(Error::Ambiguous(format!(
                "branch {branch} predicts {spec}, which differs from the limit by {dev:.3e}"
            )));
        }
        Ok(LimitClassification {
            outcome: Outcome::ConvergesTo(spec),
            evidence,
            branch: branch.into(),
            notes,
        })
    }

    fn support_subgroup(&self, limit: &AlgebraElement) -> Result<Subgroup> {
        let n = self.sekine.n();
        let support = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| limit.abelian()[self.sekine.index(i, j)].norm() > 1e-8);
        Subgroup::from_elements(n, support)
    }

    /// Reads `τ` off the limit's matrix block: row `m ≡ l (mod q)` holds `q τ_{j−i}`.
    fn tau_spec(
        &self,
        limit: &AlgebraElement,
        n: usize,
        q: usize,
        l: usize,
    ) -> Result<IdempotentSpec> {
        let p = n / q;
        let row = if l == 0 { q - 1 } else { l - 1 };
        let mut entries = Vec::with_capacity(p);
        for r in 0..p {
            let z = limit.matrix()[(row, (row + q * r) % n)] / q as f64;
            let sign = if (z - Complex64::new(1.0, 0.0)).norm() <= 1e-8 {
                1
            } else if (z + Complex64::new(1.0, 0.0)).norm() <= 1e-8 {
                -1
            } else {
                return Err(Error::Ambiguous(format!(
                    "limit matrix entry {z} is not a sign"
                )));
            };
            entries.push(sign);
        }
        Ok(IdempotentSpec::HGammaLTau {
            p,
            q,
            l,
            tau: SignVector::new(entries)?,
        })
    }

    pub fn trace(&self, k_max: u64) -> Result<WalkReport> {
        check_steps(k_max)?;
        let mut steps = Vec::with_capacity(k_max as usize);
        for k in 1..=k_max {
            steps.push(StepRecord {
                k,
                qtv: self.qtv(k)?,
                lower: self.ds_lower(k)?,
                upper: self.ds_upper(k)?,
            });
        }
        let classification = self.classify()?;
        let cycle = match classification.outcome {
            Outcome::Diverges { period } => period,
            _ => None,
        };
        Ok(WalkReport {
            group: "kpn".into(),
            n: Some(self.sekine.n()),
            steps,
            classification,
            cycle,
        })
    }
}

/// `φ_p`: `a_{ρ_{lp}^+} = η^{lp}` for `0 ≤ l < q`, where `n = pq`, `q > 1`.
pub fn phi_p(n: usize, p: usize) -> Result<CentralElement> {
    let sekine = Sekine::new(n)?;
    if p == 0 || !n.is_multiple_of(p) || p == n {
        return Err(Error::InvalidParameter(format!(
            "p = {p} must be a proper divisor of n = {n}"
        )));
    }
    CentralElement::new(
        n,
        (0..n / p).map(|l| (IrrepLabel::RhoPlus(l * p), sekine.eta_pow((l * p) as i64))),
    )
}

/// `ψ_p = F((ρ_0^+ − ρ_0^-) Σ_l η^{lp} ρ_{lp}^+)`: `φ_p` with every
/// `ρ_{lp}^-` carrying the opposite coefficient.
pub fn psi_p(n: usize, p: usize) -> Result<CentralElement> {
    let mut a = phi_p(n, p)?;
    for l in 0..n / p {
        let z = a.get(IrrepLabel::RhoPlus(l * p));
        a.set(IrrepLabel::RhoMinus(l * p), -z)?;
    }
    Ok(a)
}

/// `a^{⋆k} = Σ (a_α^k / d_α^{k−1}) χ_α`.
pub fn convolution_power(a: &CentralElement, k: u64) -> Result<CentralElement> {
    check_steps(k)?;
    CentralElement::new(
        a.n(),
        a.iter()
            .map(|(l, z)| (l, power_coefficient(z, l.dim() as f64, k))),
    )
}

pub fn qtv_to_haar(a: &CentralElement, k: u64, tol: f64) -> Result<f64> {
    Walk::new(a.clone(), tol)?.qtv(k)
}

pub fn ds_upper_bound(a: &CentralElement, k: u64, tol: f64) -> Result<f64> {
    Walk::new(a.clone(), tol)?.ds_upper(k)
}

pub fn ds_lower_bound(a: &CentralElement, k: u64, tol: f64) -> Result<f64> {
    Walk::new(a.clone(), tol)?.ds_lower(k)
}

pub fn classify_limit(a: &CentralElement, tol: f64) -> Result<LimitClassification> {
    Walk::new(a.clone(), tol)?.classify()
}

pub fn detect_cycle(a: &CentralElement, max_period: usize, tol: f64) -> Result<Option<usize>> {
    Walk::new(a.clone(), crate::algebra::DEFAULT_TOL)?.detect_cycle(max_period, tol)
}

pub fn walk_trace(a: &CentralElement, k_max: u64, tol: f64) -> Result<WalkReport> {
    Walk::new(a.clone(), tol)?.trace(k_max)
}

/// The cosine state `a_{ρ_l^+} = cos(2lπ/n)` for odd `n ≥ 3`.
pub fn cutoff_state(n: usize) -> Result<CentralElement> {
    check_cutoff_n(n)?;
    let sekine = Sekine::new(n)?;
    CentralElement::new(
        n,
        (0..n).map(|l| {
            (
                IrrepLabel::RhoPlus(l),
                Complex64::new(sekine.eta_pow(l as i64).re, 0.0),
            )
        }),
    )
}

fn check_cutoff_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "the cosine walk needs n >= 3, got {n}"
        )));
    }
    if n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "n = {n} is even: then a_rho+:{} = -1 and the cosine walk does not converge to the Haar state",
            n / 2
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutoffBounds {
    pub lower: f64,
    /// Valid for every `k ≥ 1`.
    pub upper_sharp: f64,
    /// Certified for `k ≥ n²`.
    pub upper_theorem: f64,
}

pub fn cutoff_bounds(n: usize, k: u64) -> Result<CutoffBounds> {
    check_cutoff_n(n)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let nf = n as f64;
    let kf = k as f64;
    let pi2 = PI * PI;
    let lower = 0.5 * (-kf * (pi2 / (2.0 * nf * nf) + pi2 * pi2 / (4.0 * nf.powi(4)))).exp();
    let x = (-kf * pi2 / (nf * nf)).exp();
    let upper_sharp = (x / (2.0 * (1.0 - x * x * x))).sqrt();
    let upper_theorem = (-kf * pi2 / (2.0 * nf * nf)).exp();
    Ok(CutoffBounds {
        lower: clamp(lower),
        upper_sharp: clamp(upper_sharp),
        upper_theorem: clamp(upper_theorem),
    })
}

/// One row of the cut-off sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutoffRow {
    pub n: usize,
    pub c: f64,
    pub k: u64,
    pub qtv: f64,
    pub bounds: CutoffBounds,
}

/// Step count `round(e^c n²)`, at least 1.
pub fn cutoff_steps(n: usize, c: f64) -> u64 {
    ((c.exp() * (n * n) as f64).round() as u64).max(1)
}

/// Exact distances of the cosine walk at `k = round(e^{±c} n²)` for every
/// `(n, c)`; rows ordered by `n`, then by signed `c` ascending.
pub fn cutoff_table(ns: &[usize], cs: &[f64]) -> Result<Vec<CutoffRow>> {
    let mut signed: Vec<f64> = cs.iter().flat_map(|&c| [c, -c]).collect();
    signed.sort_by(|a, b| a.total_cmp(b));
    signed.dedup_by(|a, b| a.to_bits() == b.to_bits() || (*a == 0.0 && *b == 0.0));
    let mut rows = Vec::new();
    for &n in ns {
        let walk = Walk::new(cutoff_state(n)?, crate::algebra::DEFAULT_TOL)?;
        for &c in &signed {
            let k = cutoff_steps(n, c);
            check_steps(k)?;
            rows.push(CutoffRow {
                n,
                c,
                k,
                qtv: walk.qtv(k)?,
                bounds: cutoff_bounds(n, k)?,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_TOL;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn phi_p(n: usize, p: usize) -> CentralElement {
        super::phi_p(n, p).unwrap()
    }

    #[test]
    fn power_basics() {
        let a = cutoff_state(5).unwrap();
        assert!(convolution_power(&a, 1).unwrap().max_abs_diff(&a) < 1e-15);
        let phi = phi_p(6, 2);
        let s = Sekine::new(6).unwrap();
        for k in 1..8u64 {
            let pk = convolution_power(&phi, k).unwrap();
            for l in 0..3usize {
                let expected = s.eta_pow((k as usize * l * 2) as i64);
                assert!((pk.get(IrrepLabel::RhoPlus(2 * l)) - expected).norm() < 1e-12);
            }
        }
        assert!(convolution_power(&a, MAX_STEPS + 1).is_err());
    }

    #[test]
    fn unit_walk_is_at_haar() {
        let w = Walk::new(CentralElement::unit(4).unwrap(), DEFAULT_TOL).unwrap();
        for k in 1..5 {
            assert_eq!(w.qtv(k).unwrap(), 0.0);
            assert_eq!(w.ds_upper(k).unwrap(), 0.0);
            assert_eq!(w.ds_lower(k).unwrap(), 0.0);
        }
        assert_eq!(w.classify().unwrap().outcome, Outcome::ConvergesToHaar);
    }

    #[test]
    fn phi_p_stays_far_from_haar() {
        let w = Walk::new(phi_p(6, 2), DEFAULT_TOL).unwrap();
        for k in 1..10 {
            assert!(w.qtv(k).unwrap() >= 0.5 - 1e-12);
            assert!((w.ds_lower(k).unwrap() - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn non_states_are_rejected() {
        let a = CentralElement::new(
            3,
            [
                (IrrepLabel::TRIVIAL, c(1.0)),
                (IrrepLabel::RhoMinus(0), c(-2.0)),
            ],
        )
        .unwrap();
        assert!(matches!(
            qtv_to_haar(&a, 1, DEFAULT_TOL),
            Err(Error::NotAState(_))
        ));
    }

    #[test]
    fn cutoff_state_examples() {
        let a = cutoff_state(3).unwrap();
        assert!((a.get(IrrepLabel::RhoPlus(1)) - c((2.0 * PI / 3.0).cos())).norm() < 1e-15);
        assert!((a.get(IrrepLabel::RhoPlus(2)) - c((4.0 * PI / 3.0).cos())).norm() < 1e-15);
        assert!(cutoff_state(4).is_err());
        assert!(cutoff_state(1).is_err());
        let b = cutoff_bounds(5, 25).unwrap();
        assert!((b.upper_theorem - (-PI * PI / 2.0).exp()).abs() < 1e-15);
        assert!((b.upper_theorem - 7.19e-3).abs() < 1e-5);
    }

    #[test]
    fn cutoff_bounds_are_ordered_past_n_squared() {
        for n in (3..=51).step_by(2) {
            let n2 = (n * n) as u64;
            for k in (n2..=10 * n2).step_by((n2 / 4).max(1) as usize) {
                let b = cutoff_bounds(n, k).unwrap();
                assert!(b.lower <= b.upper_sharp, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn cosine_walk_is_sandwiched() {
        let w = Walk::new(cutoff_state(5).unwrap(), DEFAULT_TOL).unwrap();
        for k in [1u64, 5, 25, 60, 200] {
            let q = w.qtv(k).unwrap();
            let b = cutoff_bounds(5, k).unwrap();
            assert!(b.lower <= q + 1e-9 && q <= b.upper_sharp + 1e-9, "k = {k}");
            if k >= 25 {
                assert!(q <= b.upper_theorem + 1e-9);
            }
        }
    }

    #[test]
    fn classification_examples() {
        let cos = classify_limit(&cutoff_state(7).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(cos.outcome, Outcome::ConvergesToHaar);

        let n = 6;
        let a = CentralElement::new(
            n,
            [
                (IrrepLabel::TRIVIAL, c(1.0)),
                (IrrepLabel::SigmaPlus(0), c(1.0)),
                (IrrepLabel::RhoPlus(2), c(0.2)),
                (IrrepLabel::RhoPlus(4), c(0.2)),
                (IrrepLabel::SigmaPlus(2), c(0.2)),
                (IrrepLabel::SigmaPlus(4), c(0.2)),
            ],
        )
        .unwrap();
        let got = classify_limit(&a, DEFAULT_TOL).unwrap();
        assert_eq!(
            got.outcome,
            Outcome::ConvergesTo(IdempotentSpec::HGammaL { q: 2, l: 0 })
        );

        let all_rho =
            CentralElement::new(7, (0..7).map(|l| (IrrepLabel::RhoPlus(l), c(1.0)))).unwrap();
        let got = classify_limit(&all_rho, DEFAULT_TOL).unwrap();
        assert!(matches!(
            got.outcome,
            Outcome::ConvergesTo(IdempotentSpec::HGammaLTau {
                q: 1,
                p: 7,
                l: 0,
                ..
            })
        ));

        let got = classify_limit(&phi_p(6, 2), DEFAULT_TOL).unwrap();
        assert_eq!(got.outcome, Outcome::Diverges { period: Some(3) });
    }

    #[test]
    fn alternating_walk_has_period_two() {
        for n in 2..6 {
            let a = CentralElement::new(
                n,
                [
                    (IrrepLabel::TRIVIAL, c(1.0)),
                    (IrrepLabel::RhoMinus(0), c(-1.0)),
                ],
            )
            .unwrap();
            assert_eq!(detect_cycle(&a, 2 * n, CYCLE_TOL).unwrap(), Some(2));
        }
    }

    #[test]
    fn status_thresholds() {
        assert_eq!(
            status_of("x", c(0.5), 1e-9).unwrap(),
            EvidenceStatus::InsideDisc
        );
        assert_eq!(
            status_of("x", c(1.0), 1e-9).unwrap(),
            EvidenceStatus::EqualsOne
        );
        assert_eq!(
            status_of("x", c(-1.0), 1e-9).unwrap(),
            EvidenceStatus::OnCircle
        );
        assert!(status_of("x", c(1.5), 1e-9).is_err());
    }

    #[test]
    fn cutoff_table_rows() {
        let rows = cutoff_table(&[5], &[0.0, 1.0]).unwrap();
        let cs: Vec<f64> = rows.iter().map(|r| r.c).collect();
        assert_eq!(cs, vec![-1.0, 0.0, 1.0]);
        assert_eq!(rows[1].k, 25);
        assert!(cutoff_table(&[4], &[0.0]).is_err());
    }
}
