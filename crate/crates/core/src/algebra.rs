//! Multi-matrix algebras `C^d ⊕ M_m(C)` carrying a tracial Haar functional.
//!
//! Both the Kac–Paljutkin algebra (`d = 4`, `m = 2`) and the Sekine algebras
//! `C(KP_n)` (`d = n²`, `m = n`) fit this shape: an abelian coordinate vector
//! followed by a single square matrix block. The Haar functional weighs every
//! abelian coordinate by `w_ab` and the matrix trace by `w_mat`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

/// Default tolerance for positivity and Hermiticity checks.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlgebraShape {
    abelian_dim: usize,
    matrix_dim: usize,
    abelian_weight: f64,
    matrix_weight: f64,
}

impl AlgebraShape {
    pub fn new(
        abelian_dim: usize,
        matrix_dim: usize,
        abelian_weight: f64,
        matrix_weight: f64,
    ) -> Result<Self> {
        if abelian_dim == 0 {
            return Err(Error::InvalidParameter(
                "abelian dimension must be positive".into(),
            ));
        }
        if !(abelian_weight > 0.0 && matrix_weight > 0.0) {
            return Err(Error::InvalidParameter(
                "Haar weights must be positive".into(),
            ));
        }
        let total = abelian_dim as f64 * abelian_weight + matrix_dim as f64 * matrix_weight;
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!(
                "Haar functional is not normalized: haar(1) = {total}"
            )));
        }
        Ok(Self {
            abelian_dim,
            matrix_dim,
            abelian_weight,
            matrix_weight,
        })
    }

    /// `C(KP) = C⁴ ⊕ M₂(C)` with Haar weights `1/8` and `2/8`.
    pub fn kac_paljutkin() -> Self {
        Self {
            abelian_dim: 4,
            matrix_dim: 2,
            abelian_weight: 1.0 / 8.0,
            matrix_weight: 2.0 / 8.0,
        }
    }

    /// `C(KP_n) = C^{n²} ⊕ M_n(C)` with Haar weights `1/(2n²)` and `1/(2n)`.
    pub fn sekine(n: usize) -> Self {
        let nf = n as f64;
        Self {
            abelian_dim: n * n,
            matrix_dim: n,
            abelian_weight: 1.0 / (2.0 * nf * nf),
            matrix_weight: 1.0 / (2.0 * nf),
        }
    }

    pub fn abelian_dim(&self) -> usize {
        self.abelian_dim
    }

    pub fn matrix_dim(&self) -> usize {
        self.matrix_dim
    }

    pub fn abelian_weight(&self) -> f64 {
        self.abelian_weight
    }

    pub fn matrix_weight(&self) -> f64 {
        self.matrix_weight
    }

    /// Total dimension `d + m²`.
    pub fn dim(&self) -> usize {
        self.abelian_dim + self.matrix_dim * self.matrix_dim
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    shape: AlgebraShape,
    abelian: Vec<Complex64>,
    matrix: CMatrix,
}

impl AlgebraElement {
    pub fn new(shape: AlgebraShape, abelian: Vec<Complex64>, matrix: CMatrix) -> Result<Self> {
        if abelian.len() != shape.abelian_dim {
            return Err(Error::ShapeMismatch(format!(
                "expected {} abelian coordinates, got {}",
                shape.abelian_dim,
                abelian.len()
            )));
        }
        if matrix.nrows() != shape.matrix_dim || matrix.ncols() != shape.matrix_dim {
            return Err(Error::ShapeMismatch(format!(
                "expected a {m}x{m} matrix block, got {}x{}",
                matrix.nrows(),
                matrix.ncols(),
                m = shape.matrix_dim
            )));
        }
        Ok(Self {
            shape,
            abelian,
            matrix,
        })
    }

    pub fn zero(shape: AlgebraShape) -> Self {
        Self {
            shape,
            abelian: vec![Complex64::new(0.0, 0.0); shape.abelian_dim],
            matrix: CMatrix::zeros(shape.matrix_dim, shape.matrix_dim),
        }
    }

    pub fn unit(shape: AlgebraShape) -> Self {
        Self {
            shape,
            abelian: vec![Complex64::new(1.0, 0.0); shape.abelian_dim],
            matrix: CMatrix::identity(shape.matrix_dim, shape.matrix_dim),
        }
    }

    /// The minimal projection onto abelian coordinate `index`.
    pub fn abelian_unit(shape: AlgebraShape, index: usize) -> Self {
        let mut x = Self::zero(shape);
        x.abelian[index] = Complex64::new(1.0, 0.0);
        x
    }

    /// The matrix unit `E_{row, col}` (zero-based indices).
    pub fn matrix_unit(shape: AlgebraShape, row: usize, col: usize) -> Self {
        let mut x = Self::zero(shape);
        x.matrix[(row, col)] = Complex64::new(1.0, 0.0);
        x
    }

    pub fn shape(&self) -> AlgebraShape {
        self.shape
    }

    pub fn abelian(&self) -> &[Complex64] {
        &self.abelian
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn abelian_mut(&mut self) -> &mut [Complex64] {
        &mut self.abelian
    }

    pub fn matrix_mut(&mut self) -> &mut CMatrix {
        &mut self.matrix
    }

    pub fn adjoint(&self) -> Self {
        Self {
            shape: self.shape,
            abelian: self.abelian.iter().map(|z| z.conj()).collect(),
            matrix: self.matrix.adjoint(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            shape: self.shape,
            abelian: self.abelian.iter().map(|z| z * s).collect(),
            matrix: &self.matrix * s,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b, |a, b| a - b))
    }

    /// Pointwise product on the abelian part, matrix product on the block.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.zip_with(other, |a, b| a * b, |a, b| a * b))
    }

    /// Largest absolute difference over all coordinates.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_shape(other)?;
        let ab = self
            .abelian
            .iter()
            .zip(&other.abelian)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        let mat = self
            .matrix
            .iter()
            .zip(other.matrix.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        Ok(ab.max(mat))
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(format!(
                "{:?} vs {:?}",
                self.shape, other.shape
            )));
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &Self,
        ab: impl Fn(Complex64, Complex64) -> Complex64,
        mat: impl Fn(&CMatrix, &CMatrix) -> CMatrix,
    ) -> Self {
        Self {
            shape: self.shape,
            abelian: self
                .abelian
                .iter()
                .zip(&other.abelian)
                .map(|(a, b)| ab(*a, *b))
                .collect(),
            matrix: mat(&self.matrix, &other.matrix),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, z) in self.abelian.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{z:.6}")?;
        }
        write!(
            f,
            "; {}x{} block)",
            self.matrix.nrows(),
            self.matrix.ncols()
        )
    }
}

// Operator sugar panics on shape mismatch; the `checked_*` methods report it.
impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: Self) -> AlgebraElement {
        self.checked_add(rhs).expect("shape mismatch in addition")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        self.checked_sub(rhs)
            .expect("shape mismatch in subtraction")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        self.checked_mul(rhs).expect("shape mismatch in product")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// `w_ab · Σ x_i + w_mat · Tr(X)`.
pub fn haar_integral(x: &AlgebraElement) -> Complex64 {
    let ab: Complex64 = x.abelian.iter().sum();
    ab * x.shape.abelian_weight + x.matrix.trace() * x.shape.matrix_weight
}

/// `∫|x|`, with `Tr|X|` realized as the sum of singular values of the block.
pub fn l1_norm(x: &AlgebraElement) -> f64 {
    let ab: f64 = x.abelian.iter().map(|z| z.norm()).sum();
    let mat: f64 = singular_values(&x.matrix).iter().sum();
    x.shape.abelian_weight * ab + x.shape.matrix_weight * mat
}

/// Quantum total variation distance between `F(a)` and `F(b)`: `½ ‖a − b‖₁`.
pub fn qtv_distance(a: &AlgebraElement, b: &AlgebraElement) -> Result<f64> {
    Ok(0.5 * l1_norm(&a.checked_sub(b)?))
}

pub fn is_positive(x: &AlgebraElement, tol: f64) -> bool {
    let abelian_ok = x.abelian.iter().all(|z| z.im.abs() <= tol && z.re >= -tol);
    abelian_ok && matrix_is_psd(&x.matrix, tol)
}

/// Hermitian within `tol` with smallest eigenvalue `≥ −tol`.
pub fn matrix_is_psd(m: &CMatrix, tol: f64) -> bool {
    if m.nrows() == 0 {
        return true;
    }
    if !is_hermitian(m, tol) {
        return false;
    }
    min_hermitian_eigenvalue(m) >= -tol
}

pub fn is_hermitian(m: &CMatrix, tol: f64) -> bool {
    let n = m.nrows();
    if n != m.ncols() {
        return false;
    }
    (0..n).all(|i| (i..n).all(|j| (m[(i, j)] - m[(j, i)].conj()).norm() <= tol))
}

/// Smallest eigenvalue of the Hermitian part `(M + M*)/2`.
pub fn min_hermitian_eigenvalue(m: &CMatrix) -> f64 {
    if m.nrows() == 0 {
        return 0.0;
    }
    let h = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    h.symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    match m.nrows() {
        0 => Vec::new(),
        1 => vec![m[(0, 0)].norm()],
        _ => m.singular_values().iter().copied().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn kp_character_x() -> AlgebraElement {
        AlgebraElement::new(
            AlgebraShape::kac_paljutkin(),
            vec![c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-2.0, 0.0)],
            CMatrix::zeros(2, 2),
        )
        .unwrap()
    }

    #[test]
    fn haar_of_unit_is_one() {
        for n in 2..8 {
            let one = AlgebraElement::unit(AlgebraShape::sekine(n));
            assert!((haar_integral(&one) - c(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn haar_examples_on_kp() {
        assert!(haar_integral(&kp_character_x()).norm() < 1e-15);
        let e1 = AlgebraElement::abelian_unit(AlgebraShape::kac_paljutkin(), 0);
        assert_eq!(haar_integral(&e1), c(0.125, 0.0));
    }

    #[test]
    fn l1_examples() {
        let shape = AlgebraShape::kac_paljutkin();
        assert_eq!(l1_norm(&AlgebraElement::zero(shape)), 0.0);
        assert!((l1_norm(&AlgebraElement::unit(shape)) - 1.0).abs() < 1e-14);
        assert!((l1_norm(&kp_character_x()) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn qtv_unit_against_point_mass() {
        // Direct evaluation: (2n² − 1) at e_(0,0), 1 at the other n² − 1 coordinates,
        // and the identity block contributes n singular values equal to one.
        for n in 2..7 {
            let shape = AlgebraShape::sekine(n);
            let nf = n as f64;
            let one = AlgebraElement::unit(shape);
            let point = AlgebraElement::abelian_unit(shape, 0).scale(c(2.0 * nf * nf, 0.0));
            let expected = 0.5
                * (shape.abelian_weight() * ((2.0 * nf * nf - 1.0) + (nf * nf - 1.0))
                    + shape.matrix_weight() * nf);
            let got = qtv_distance(&one, &point).unwrap();
            assert!(
                (got - expected).abs() < 1e-14,
                "n = {n}: {got} vs {expected}"
            );
            if n == 2 {
                assert!((got - 0.875).abs() < 1e-14);
            }
        }
        let one = AlgebraElement::unit(AlgebraShape::sekine(3));
        assert_eq!(qtv_distance(&one, &one).unwrap(), 0.0);
    }

    #[test]
    fn qtv_rejects_shape_mismatch() {
        let a = AlgebraElement::unit(AlgebraShape::sekine(2));
        let b = AlgebraElement::unit(AlgebraShape::sekine(3));
        assert!(matches!(qtv_distance(&a, &b), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn positivity_examples() {
        let shape = AlgebraShape::sekine(3);
        assert!(is_positive(&AlgebraElement::unit(shape), DEFAULT_TOL));
        let mut x = AlgebraElement::unit(shape);
        x.abelian_mut()[4] = c(-1.0, 0.0);
        assert!(!is_positive(&x, DEFAULT_TOL));
        let mut y = AlgebraElement::unit(shape);
        y.matrix_mut()[(0, 1)] = c(0.0, 1.0);
        assert!(!is_positive(&y, DEFAULT_TOL), "non-Hermitian block");
    }

    #[test]
    fn shape_normalization_is_enforced() {
        assert!(AlgebraShape::new(4, 2, 0.125, 0.25).is_ok());
        assert!(AlgebraShape::new(4, 2, 0.125, 0.3).is_err());
        assert!(AlgebraShape::new(0, 2, 0.125, 0.25).is_err());
    }

    fn element_strategy(n: usize) -> impl Strategy<Value = AlgebraElement> {
        let d = n * n;
        let m = n;
        (
            proptest::collection::vec((-3.0f64..3.0, -3.0f64..3.0), d),
            proptest::collection::vec((-3.0f64..3.0, -3.0f64..3.0), m * m),
        )
            .prop_map(move |(ab, mat)| {
                let abelian = ab.into_iter().map(|(r, i)| c(r, i)).collect();
                let matrix = CMatrix::from_iterator(m, m, mat.into_iter().map(|(r, i)| c(r, i)));
                AlgebraElement::new(AlgebraShape::sekine(n), abelian, matrix).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn haar_of_square_is_nonnegative(x in element_strategy(3)) {
            let h = haar_integral(&(&x.adjoint() * &x));
            prop_assert!(h.re >= -1e-12);
            prop_assert!(h.im.abs() < 1e-12);
        }

        #[test]
        fn haar_commutes_with_adjoint(x in element_strategy(3)) {
            let lhs = haar_integral(&x.adjoint());
            let rhs = haar_integral(&x).conj();
            prop_assert!((lhs - rhs).norm() < 1e-12);
        }

        #[test]
        fn haar_is_tracial(x in element_strategy(4), y in element_strategy(4)) {
            let xy = haar_integral(&(&x * &y));
            let yx = haar_integral(&(&y * &x));
            prop_assert!((xy - yx).norm() < 1e-10);
        }

        #[test]
        fn l1_is_a_norm(x in element_strategy(3), y in element_strategy(3), s in -4.0f64..4.0) {
            let sum = l1_norm(&(&x + &y));
            prop_assert!(sum <= l1_norm(&x) + l1_norm(&y) + 1e-10);
            let scaled = l1_norm(&x.scale(c(s, 0.0)));
            prop_assert!((scaled - s.abs() * l1_norm(&x)).abs() < 1e-9);
        }
    }
}
