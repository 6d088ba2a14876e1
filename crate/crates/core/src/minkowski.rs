//! Fixed-dimension tensor algebra on Minkowski space with signature (+,−,−,−).
//!
//! Vectors are stored with upper (contravariant) indices; antisymmetric and
//! symmetric rank-2 tensors are stored with lower indices. Raising and lowering
//! is always explicit.
//!
//! An antisymmetric tensor is kept as its six independent components, split in
//! electric/magnetic fashion: `E_i = G_{0i}`, and `G_{ij} = ε_{ijk} B_k`, i.e.
//! `B_1 = G_{23}`, `B_2 = G_{31}`, `B_3 = G_{12}`. The Levi-Civita symbol is
//! fixed by `ε_{0123} = +1`, which makes the Hodge dual `*(E, B) = (B, −E)`.

use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Mat4 = [[f64; 4]; 4];
pub type CMat4 = [[Complex64; 4]; 4];

/// Diagonal of g_μν (equal to g^μν).
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Orthonormality tolerance for boost planes.
pub const PLANE_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const ZERO: FourVector = FourVector([0.0; 4]);

    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector([t, x, y, z])
    }

    pub fn basis(mu: usize) -> Self {
        let mut v = [0.0; 4];
        v[mu] = 1.0;
        FourVector(v)
    }

    pub fn dot(&self, other: &FourVector) -> f64 {
        (0..4).map(|i| METRIC[i] * self.0[i] * other.0[i]).sum()
    }

    pub fn norm2(&self) -> f64 {
        self.dot(self)
    }

    /// Covariant components v_μ.
    pub fn lower(&self) -> [f64; 4] {
        std::array::from_fn(|i| METRIC[i] * self.0[i])
    }

    pub fn euclidean_norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    /// Scales to |v·v| = 1. Returns `None` for vectors that are null relative
    /// to their Euclidean size (|v·v| ≤ `band`·‖v‖²).
    pub fn normalized(&self, band: f64) -> Option<FourVector> {
        let n2 = self.norm2();
        let e2 = self.euclidean_norm().powi(2);
        if e2 == 0.0 || n2.abs() <= band * e2 {
            return None;
        }
        Some(*self * (1.0 / n2.abs().sqrt()))
    }

    pub fn to_complex(&self) -> ComplexFourVector {
        ComplexFourVector(self.0.map(|x| Complex64::new(x, 0.0)))
    }
}

impl Index<usize> for FourVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for FourVector {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.0[i]
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, o: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl AddAssign for FourVector {
    fn add_assign(&mut self, o: FourVector) {
        *self = *self + o;
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, o: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        self * -1.0
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, s: f64) -> FourVector {
        FourVector(self.0.map(|x| x * s))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ComplexFourVector(pub [Complex64; 4]);

impl ComplexFourVector {
    pub const ZERO: ComplexFourVector = ComplexFourVector([Complex64::new(0.0, 0.0); 4]);

    pub fn from_parts(re: &FourVector, im: &FourVector) -> Self {
        ComplexFourVector(std::array::from_fn(|i| Complex64::new(re.0[i], im.0[i])))
    }

    /// Bilinear Minkowski product, no conjugation.
    pub fn dot(&self, other: &ComplexFourVector) -> Complex64 {
        (0..4).map(|i| self.0[i] * other.0[i] * METRIC[i]).sum()
    }

    /// Sesquilinear Minkowski product, conjugating `self`.
    pub fn hermitian_dot(&self, other: &ComplexFourVector) -> Complex64 {
        (0..4)
            .map(|i| self.0[i].conj() * other.0[i] * METRIC[i])
            .sum()
    }

    pub fn dot_real(&self, other: &FourVector) -> Complex64 {
        (0..4).map(|i| self.0[i] * (other.0[i] * METRIC[i])).sum()
    }

    pub fn lower(&self) -> [Complex64; 4] {
        std::array::from_fn(|i| self.0[i] * METRIC[i])
    }

    pub fn re(&self) -> FourVector {
        FourVector(self.0.map(|z| z.re))
    }

    pub fn im(&self) -> FourVector {
        FourVector(self.0.map(|z| z.im))
    }

    pub fn conj(&self) -> ComplexFourVector {
        ComplexFourVector(self.0.map(|z| z.conj()))
    }

    /// Euclidean (hermitian) length of the component array.
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, s: Complex64) -> ComplexFourVector {
        ComplexFourVector(self.0.map(|z| z * s))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Index<usize> for ComplexFourVector {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.0[i]
    }
}

impl Add for ComplexFourVector {
    type Output = ComplexFourVector;
    fn add(self, o: ComplexFourVector) -> ComplexFourVector {
        ComplexFourVector(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for ComplexFourVector {
    type Output = ComplexFourVector;
    fn sub(self, o: ComplexFourVector) -> ComplexFourVector {
        ComplexFourVector(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Real antisymmetric tensor G_μν.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct AntisymmetricTensor {
    pub e: [f64; 3],
    pub b: [f64; 3],
}

/// Lorentz invariants of an antisymmetric tensor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Invariants {
    /// G_αβ G^αβ = 2(B² − E²)
    pub s1: f64,
    /// *G_αβ G^αβ = −4 E·B
    pub s2: f64,
    /// ¼ √(s1² + s2²)
    pub k: f64,
}

impl AntisymmetricTensor {
    pub const ZERO: AntisymmetricTensor = AntisymmetricTensor {
        e: [0.0; 3],
        b: [0.0; 3],
    };

    pub fn new(e: [f64; 3], b: [f64; 3]) -> Self {
        AntisymmetricTensor { e, b }
    }

    /// Reads the upper triangle of a lower-index matrix.
    pub fn from_lower(g: &Mat4) -> Self {
        AntisymmetricTensor {
            e: [g[0][1], g[0][2], g[0][3]],
            b: [g[2][3], g[3][1], g[1][2]],
        }
    }

    /// G_μν as a matrix; antisymmetric by construction.
    pub fn lower(&self) -> Mat4 {
        let [e1, e2, e3] = self.e;
        let [b1, b2, b3] = self.b;
        [
            [0.0, e1, e2, e3],
            [-e1, 0.0, b3, -b2],
            [-e2, -b3, 0.0, b1],
            [-e3, b2, -b1, 0.0],
        ]
    }

    /// G^μ_ν: the linear map acting on contravariant vectors.
    pub fn mixed(&self) -> Mat4 {
        let l = self.lower();
        std::array::from_fn(|i| std::array::from_fn(|j| METRIC[i] * l[i][j]))
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        let m = self.mixed();
        FourVector(std::array::from_fn(|i| {
            (0..4).map(|j| m[i][j] * v.0[j]).sum()
        }))
    }

    pub fn dual(&self) -> Self {
        AntisymmetricTensor {
            e: self.b,
            b: self.e.map(|x| -x),
        }
    }

    /// G cos θ + *G sin θ.
    pub fn duality_rotate(&self, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        AntisymmetricTensor {
            e: std::array::from_fn(|i| self.e[i] * c + self.b[i] * s),
            b: std::array::from_fn(|i| self.b[i] * c - self.e[i] * s),
        }
    }

    /// Full contraction G_αβ H^αβ.
    pub fn contract(&self, h: &AntisymmetricTensor) -> f64 {
        2.0 * (dot3(&self.b, &h.b) - dot3(&self.e, &h.e))
    }

    pub fn invariants(&self) -> Invariants {
        let s1 = self.contract(self);
        let s2 = self.dual().contract(self);
        Invariants {
            s1,
            s2,
            k: 0.25 * s1.hypot(s2),
        }
    }

    pub fn e_dot_b(&self) -> f64 {
        dot3(&self.e, &self.b)
    }

    /// E² − B².
    pub fn electric_excess(&self) -> f64 {
        dot3(&self.e, &self.e) - dot3(&self.b, &self.b)
    }

    /// Frobenius norm of the component matrix.
    pub fn norm(&self) -> f64 {
        (2.0 * (dot3(&self.e, &self.e) + dot3(&self.b, &self.b))).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.e.iter().chain(self.b.iter()).all(|x| x.is_finite())
    }
}

impl Add for AntisymmetricTensor {
    type Output = AntisymmetricTensor;
    fn add(self, o: Self) -> Self {
        AntisymmetricTensor {
            e: std::array::from_fn(|i| self.e[i] + o.e[i]),
            b: std::array::from_fn(|i| self.b[i] + o.b[i]),
        }
    }
}

impl Sub for AntisymmetricTensor {
    type Output = AntisymmetricTensor;
    fn sub(self, o: Self) -> Self {
        self + o * -1.0
    }
}

impl Mul<f64> for AntisymmetricTensor {
    type Output = AntisymmetricTensor;
    fn mul(self, s: f64) -> Self {
        AntisymmetricTensor {
            e: self.e.map(|x| x * s),
            b: self.b.map(|x| x * s),
        }
    }
}

/// Complex antisymmetric tensor, same component layout as the real one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ComplexAntisymmetricTensor {
    pub e: [Complex64; 3],
    pub b: [Complex64; 3],
}

impl ComplexAntisymmetricTensor {
    pub fn from_parts(re: &AntisymmetricTensor, im: &AntisymmetricTensor) -> Self {
        ComplexAntisymmetricTensor {
            e: std::array::from_fn(|i| Complex64::new(re.e[i], im.e[i])),
            b: std::array::from_fn(|i| Complex64::new(re.b[i], im.b[i])),
        }
    }

    /// Builds from a lower-index matrix, reading its upper triangle.
    pub fn from_lower(g: &CMat4) -> Self {
        ComplexAntisymmetricTensor {
            e: [g[0][1], g[0][2], g[0][3]],
            b: [g[2][3], g[3][1], g[1][2]],
        }
    }

    pub fn lower(&self) -> CMat4 {
        let z = Complex64::new(0.0, 0.0);
        let [e1, e2, e3] = self.e;
        let [b1, b2, b3] = self.b;
        [
            [z, e1, e2, e3],
            [-e1, z, b3, -b2],
            [-e2, -b3, z, b1],
            [-e3, b2, -b1, z],
        ]
    }

    pub fn re(&self) -> AntisymmetricTensor {
        AntisymmetricTensor {
            e: self.e.map(|z| z.re),
            b: self.b.map(|z| z.re),
        }
    }

    pub fn im(&self) -> AntisymmetricTensor {
        AntisymmetricTensor {
            e: self.e.map(|z| z.im),
            b: self.b.map(|z| z.im),
        }
    }
}

/// Real symmetric tensor T_μν.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SymmetricTensor(pub Mat4);

impl SymmetricTensor {
    pub const ZERO: SymmetricTensor = SymmetricTensor([[0.0; 4]; 4]);

    /// Evaluates `f` on the upper triangle only and mirrors it, so the result
    /// is exactly symmetric.
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in i..4 {
                let v = f(i, j);
                m[i][j] = v;
                m[j][i] = v;
            }
        }
        SymmetricTensor(m)
    }

    pub fn diagonal(d: [f64; 4]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i] } else { 0.0 })
    }

    /// T^μ_ν.
    pub fn mixed(&self) -> Mat4 {
        std::array::from_fn(|i| std::array::from_fn(|j| METRIC[i] * self.0[i][j]))
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        let m = self.mixed();
        FourVector(std::array::from_fn(|i| {
            (0..4).map(|j| m[i][j] * v.0[j]).sum()
        }))
    }

    /// T^μ_μ.
    pub fn trace(&self) -> f64 {
        (0..4).map(|i| METRIC[i] * self.0[i][i]).sum()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, o: &SymmetricTensor) -> f64 {
        (0..16)
            .map(|n| (self.0[n / 4][n % 4] - o.0[n / 4][n % 4]).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_finite())
    }

    /// Components in a new frame: T'_μν = Λ_μ^α Λ_ν^β T_αβ, where `lambda`
    /// maps contravariant vectors (v' = Λ v).
    pub fn transform(&self, lambda: &Mat4) -> SymmetricTensor {
        // Covariant components transform with the inverse transpose, which for
        // a Lorentz matrix is g Λ g.
        let cov: Mat4 =
            std::array::from_fn(|i| std::array::from_fn(|j| METRIC[i] * lambda[i][j] * METRIC[j]));
        SymmetricTensor::from_fn(|m, n| {
            let mut s = 0.0;
            for a in 0..4 {
                for b in 0..4 {
                    s += cov[m][a] * cov[n][b] * self.0[a][b];
                }
            }
            s
        })
    }
}

impl Add for SymmetricTensor {
    type Output = SymmetricTensor;
    fn add(self, o: Self) -> Self {
        SymmetricTensor::from_fn(|i, j| self.0[i][j] + o.0[i][j])
    }
}

impl Sub for SymmetricTensor {
    type Output = SymmetricTensor;
    fn sub(self, o: Self) -> Self {
        SymmetricTensor::from_fn(|i, j| self.0[i][j] - o.0[i][j])
    }
}

impl Mul<f64> for SymmetricTensor {
    type Output = SymmetricTensor;
    fn mul(self, s: f64) -> Self {
        SymmetricTensor::from_fn(|i, j| self.0[i][j] * s)
    }
}

pub fn minkowski_dot(a: &FourVector, b: &FourVector) -> f64 {
    a.dot(b)
}

pub fn hodge_dual(g: &AntisymmetricTensor) -> AntisymmetricTensor {
    g.dual()
}

/// Largest deviation of the pair from {t·t = 1, z·z = −1, t·z = 0}.
pub fn plane_defect(t: &FourVector, z: &FourVector) -> f64 {
    (t.norm2() - 1.0)
        .abs()
        .max((z.norm2() + 1.0).abs())
        .max(t.dot(z).abs())
}

/// The boost of rapidity `rapidity` acting in the plane (t̂, ẑ): t̂ ↦ cosh t̂ + sinh ẑ,
/// ẑ ↦ sinh t̂ + cosh ẑ, identity on the orthogonal complement.
pub fn boost_matrix(t: &FourVector, z: &FourVector, rapidity: f64) -> Result<Mat4> {
    let defect = plane_defect(t, z);
    if !(defect <= PLANE_TOLERANCE) {
        return Err(Error::NonOrthonormalPlane(defect));
    }
    let (ch, sh) = (rapidity.cosh(), rapidity.sinh());
    let (tl, zl) = (t.lower(), z.lower());
    // v ↦ v + a[(ch−1) t + sh z] + b[sh t + (ch−1) z], a = t·v, b = −z·v.
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let delta = if i == j { 1.0 } else { 0.0 };
            let through_a = ((ch - 1.0) * t[i] + sh * z[i]) * tl[j];
            let through_b = (sh * t[i] + (ch - 1.0) * z[i]) * -zl[j];
            delta + through_a + through_b
        })
    }))
}

/// Spatial rotation by |ω| about ω̂ (Rodrigues), embedded in a 4×4 matrix.
pub fn rotation_matrix(omega: [f64; 3]) -> Mat4 {
    let angle = dot3(&omega, &omega).sqrt();
    let mut r = [[0.0; 4]; 4];
    r[0][0] = 1.0;
    if angle == 0.0 {
        (1..4).for_each(|i| r[i][i] = 1.0);
        return r;
    }
    let n = omega.map(|w| w / angle);
    let (s, c) = angle.sin_cos();
    for i in 0..3 {
        for j in 0..3 {
            let delta = if i == j { 1.0 } else { 0.0 };
            let cross = match (i, j) {
                (0, 1) => -n[2],
                (0, 2) => n[1],
                (1, 0) => n[2],
                (1, 2) => -n[0],
                (2, 0) => -n[1],
                (2, 1) => n[0],
                _ => 0.0,
            };
            r[i + 1][j + 1] = c * delta + s * cross + (1.0 - c) * n[i] * n[j];
        }
    }
    r
}

/// Pure boost with velocity `beta` (|β| < 1).
pub fn velocity_boost(beta: [f64; 3]) -> Result<Mat4> {
    let b2 = dot3(&beta, &beta);
    if !(b2 < 1.0) {
        return Err(Error::Invalid(format!("boost speed² {b2} is not below 1")));
    }
    let gamma = 1.0 / (1.0 - b2).sqrt();
    let mut l = [[0.0; 4]; 4];
    l[0][0] = gamma;
    for i in 0..3 {
        l[0][i + 1] = gamma * beta[i];
        l[i + 1][0] = gamma * beta[i];
        for j in 0..3 {
            let delta = if i == j { 1.0 } else { 0.0 };
            let extra = if b2 > 0.0 {
                (gamma - 1.0) * beta[i] * beta[j] / b2
            } else {
                0.0
            };
            l[i + 1][j + 1] = delta + extra;
        }
    }
    Ok(l)
}

pub fn lorentz_boost(
    v: &FourVector,
    plane: (&FourVector, &FourVector),
    rapidity: f64,
) -> Result<FourVector> {
    let l = boost_matrix(plane.0, plane.1, rapidity)?;
    Ok(mat_vec(&l, v))
}

pub fn mat_vec(m: &Mat4, v: &FourVector) -> FourVector {
    FourVector(std::array::from_fn(|i| {
        (0..4).map(|j| m[i][j] * v.0[j]).sum()
    }))
}

pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()))
}

pub fn cmat_mul(a: &CMat4, b: &CMat4) -> CMat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()))
}

pub fn cmat_vec(m: &CMat4, v: &ComplexFourVector) -> ComplexFourVector {
    ComplexFourVector(std::array::from_fn(|i| {
        (0..4).map(|j| m[i][j] * v.0[j]).sum()
    }))
}

/// Levi-Civita symbol with ε_{0123} = +1 (all lower indices).
pub fn levi_civita(idx: [usize; 4]) -> f64 {
    let mut p = idx;
    let mut sign = 1.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if p[i] == p[j] {
                return 0.0;
            }
            if p[i] > p[j] {
                p.swap(i, j);
                sign = -sign;
            }
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_vec() -> impl Strategy<Value = FourVector> {
        prop::array::uniform4(-5.0..5.0f64).prop_map(FourVector)
    }

    fn arb_tensor() -> impl Strategy<Value = AntisymmetricTensor> {
        (
            prop::array::uniform3(-3.0..3.0f64),
            prop::array::uniform3(-3.0..3.0f64),
        )
            .prop_map(|(e, b)| AntisymmetricTensor::new(e, b))
    }

    /// *G_μν = ½ ε_μνρσ G^ρσ by brute force.
    fn dual_by_summation(g: &AntisymmetricTensor) -> AntisymmetricTensor {
        let lo = g.lower();
        let up: Mat4 =
            std::array::from_fn(|i| std::array::from_fn(|j| METRIC[i] * METRIC[j] * lo[i][j]));
        let mut d = [[0.0; 4]; 4];
        for m in 0..4 {
            for n in 0..4 {
                for r in 0..4 {
                    for s in 0..4 {
                        d[m][n] += 0.5 * levi_civita([m, n, r, s]) * up[r][s];
                    }
                }
            }
        }
        AntisymmetricTensor::from_lower(&d)
    }

    #[test]
    fn boost_moves_rest_frame() {
        let l = velocity_boost([0.6, 0.0, 0.0]).unwrap();
        let u = mat_vec(&l, &FourVector::basis(0));
        assert!((u - FourVector::new(1.25, 0.75, 0.0, 0.0)).euclidean_norm() < 1e-15);
        assert!(velocity_boost([1.0, 0.0, 0.0]).is_err());
        let r = rotation_matrix([0.0, 0.0, std::f64::consts::FRAC_PI_2]);
        let x = mat_vec(&r, &FourVector::basis(1));
        assert!((x - FourVector::basis(2)).euclidean_norm() < 1e-15);
    }

    #[test]
    fn signature_examples() {
        let e0 = FourVector::basis(0);
        assert_eq!(e0.dot(&e0), 1.0);
        let v = FourVector::new(1.0, 1.0, 0.0, 0.0);
        assert_eq!(v.norm2(), 0.0);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let l = FourVector::new(r, 0.0, 0.0, r);
        let n = FourVector::new(r, 0.0, 0.0, -r);
        assert!((l.dot(&n) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn levi_civita_sign() {
        assert_eq!(levi_civita([0, 1, 2, 3]), 1.0);
        assert_eq!(levi_civita([1, 0, 2, 3]), -1.0);
        assert_eq!(levi_civita([2, 3, 0, 1]), 1.0);
        assert_eq!(levi_civita([0, 0, 2, 3]), 0.0);
    }

    #[test]
    fn dual_swaps_electric_into_magnetic() {
        let g = AntisymmetricTensor::new([1.0, -2.0, 0.5], [0.0; 3]);
        let d = g.dual();
        assert_eq!(d.e, [0.0; 3]);
        assert_eq!(d.b, [-1.0, 2.0, -0.5]);
    }

    #[test]
    fn pure_electric_invariants() {
        let inv = AntisymmetricTensor::new([1.0, 0.0, 0.0], [0.0; 3]).invariants();
        assert_eq!(inv.s1, -2.0);
        assert_eq!(inv.s2, 0.0);
        assert_eq!(inv.k, 0.5);
        assert_eq!(
            AntisymmetricTensor::ZERO.invariants(),
            Invariants {
                s1: 0.0,
                s2: 0.0,
                k: 0.0
            }
        );
    }

    #[test]
    fn boost_of_time_axis() {
        let t = FourVector::basis(0);
        let z = FourVector::basis(3);
        let out = lorentz_boost(&t, (&t, &z), 0.7).unwrap();
        let want = FourVector::new(0.7f64.cosh(), 0.0, 0.0, 0.7f64.sinh());
        assert!((out - want).euclidean_norm() < 1e-15);
        let same = lorentz_boost(&FourVector::new(1.0, 2.0, 3.0, 4.0), (&t, &z), 0.0).unwrap();
        assert_eq!(same, FourVector::new(1.0, 2.0, 3.0, 4.0));
    }

    #[test]
    fn boost_rejects_bad_plane() {
        let t = FourVector::new(1.0, 0.0, 0.0, 0.1);
        let z = FourVector::basis(3);
        assert!(matches!(
            lorentz_boost(&t, (&t, &z), 0.1),
            Err(Error::NonOrthonormalPlane(_))
        ));
    }

    #[test]
    fn symmetric_transform_identity() {
        let t = SymmetricTensor::from_fn(|i, j| (i * 4 + j) as f64 + 0.5);
        let id: Mat4 =
            std::array::from_fn(|i| std::array::from_fn(|j| if i == j { 1.0 } else { 0.0 }));
        assert_eq!(t.transform(&id), t);
    }

    proptest! {
        #[test]
        fn dot_is_symmetric(a in arb_vec(), b in arb_vec()) {
            prop_assert_eq!(a.dot(&b), b.dot(&a));
        }

        #[test]
        fn double_dual_is_minus_identity(g in arb_tensor()) {
            let dd = g.dual().dual();
            let diff = (dd + g).norm();
            prop_assert!(diff <= 1e-12);
        }

        #[test]
        fn closed_form_dual_matches_levi_civita(g in arb_tensor()) {
            let diff = (g.dual() - dual_by_summation(&g)).norm();
            prop_assert!(diff <= 1e-12);
        }

        #[test]
        fn boost_preserves_products(a in arb_vec(), b in arb_vec(), w in -3.0..3.0f64) {
            let t = FourVector::basis(0);
            let z = FourVector::new(0.0, 0.6, 0.0, 0.8);
            let a2 = lorentz_boost(&a, (&t, &z), w).unwrap();
            let b2 = lorentz_boost(&b, (&t, &z), w).unwrap();
            let scale = 1.0 + a.euclidean_norm() * b.euclidean_norm() * (2.0 * w.abs()).exp();
            prop_assert!((a2.dot(&b2) - a.dot(&b)).abs() <= 1e-12 * scale);
        }

        #[test]
        fn k_is_duality_invariant(g in arb_tensor(), theta in -6.3..6.3f64) {
            let k0 = g.invariants().k;
            let k1 = g.duality_rotate(theta).invariants().k;
            prop_assert!(k0 >= 0.0);
            prop_assert!((k0 - k1).abs() <= 1e-12 * (1.0 + k0));
        }

        #[test]
        fn mixed_invariant_is_minus_four_e_dot_b(g in arb_tensor()) {
            let s2 = g.invariants().s2;
            prop_assert!((s2 + 4.0 * g.e_dot_b()).abs() <= 1e-12 * (1.0 + s2.abs()));
        }

        #[test]
        fn lorentz_matrices_preserve_products(
            a in arb_vec(),
            b in arb_vec(),
            omega in prop::array::uniform3(-4.0..4.0f64),
            beta in prop::array::uniform3(-0.5..0.5f64),
        ) {
            let l = mat_mul(&velocity_boost(beta).unwrap(), &rotation_matrix(omega));
            let (a2, b2) = (mat_vec(&l, &a), mat_vec(&l, &b));
            let scale = 1.0 + 10.0 * a.euclidean_norm() * b.euclidean_norm();
            prop_assert!((a2.dot(&b2) - a.dot(&b)).abs() <= 1e-12 * scale);
        }
    }
}
