//! Rotation/boost generators, the Pauli-Lubanski operator on plane-wave
//! polarizations, and the resulting spin classification.
//!
//! On a plane wave exp(−ik·x) the momentum operator P_μ acts as the covariant
//! wave vector k_μ = (k₀, −k⃗). With `W^μ = −i R^μ` the real matrices are
//!
//! R¹ = P₀M₁ + P₂N₃ − P₃N₂,  R² = P₀M₂ + P₃N₁ − P₁N₃,
//! R³ = P₀M₃ + P₁N₂ − P₂N₁,  R⁰ = P₁M₁ + P₂M₂ + P₃M₃,
//!
//! acting directly on the polarization component array. W matrices are kept
//! non-hermitian exactly as written; the hermitian objects are the S matrices.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::complex_null_vector;
use crate::minkowski::{cmat_vec, CMat4, ComplexFourVector, FourVector, Mat4};

/// Residual bound for classified modes, relative to ‖ε‖.
pub const MODE_TOLERANCE: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorSet {
    /// Rotations M₁ = M₃₂, M₂ = M₁₃, M₃ = M₂₁.
    pub m: [Mat4; 3],
    /// Boosts N₁ = M₀₁, N₂ = M₀₂, N₃ = M₀₃.
    pub n: [Mat4; 3],
}

pub fn generators() -> GeneratorSet {
    let z = [0.0; 4];
    GeneratorSet {
        m: [
            [z, z, [0.0, 0.0, 0.0, -1.0], [0.0, 0.0, 1.0, 0.0]],
            [z, [0.0, 0.0, 0.0, 1.0], z, [0.0, -1.0, 0.0, 0.0]],
            [z, [0.0, 0.0, -1.0, 0.0], [0.0, 1.0, 0.0, 0.0], z],
        ],
        n: [
            [[0.0, 1.0, 0.0, 0.0], [1.0, 0.0, 0.0, 0.0], z, z],
            [[0.0, 0.0, 1.0, 0.0], z, [1.0, 0.0, 0.0, 0.0], z],
            [[0.0, 0.0, 0.0, 1.0], z, z, [1.0, 0.0, 0.0, 0.0]],
        ],
    }
}

fn lin(terms: &[(f64, &Mat4)]) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| terms.iter().map(|(c, m)| c * m[i][j]).sum()))
}

fn times_minus_i(r: &Mat4) -> CMat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| Complex64::new(0.0, -r[i][j])))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PauliLubanski {
    pub k: FourVector,
    pub mass: f64,
    /// W⁰, W¹, W², W³.
    pub w: [CMat4; 4],
    /// The real matrices with W^μ = −i R^μ.
    pub r: [Mat4; 4],
}

/// Requires a future-pointing time-like k; the mass is read off as √(k·k).
pub fn pauli_lubanski(k: &FourVector) -> Result<PauliLubanski> {
    let kk = k.norm2();
    if !k.is_finite() || !(kk > 0.0) || k[0] <= 0.0 {
        return Err(Error::NotTimelike(kk));
    }
    let g = generators();
    let p = k.lower();
    let [m1, m2, m3] = &g.m;
    let [n1, n2, n3] = &g.n;
    let r = [
        lin(&[(p[1], m1), (p[2], m2), (p[3], m3)]),
        lin(&[(p[0], m1), (p[2], n3), (-p[3], n2)]),
        lin(&[(p[0], m2), (p[3], n1), (-p[1], n3)]),
        lin(&[(p[0], m3), (p[1], n2), (-p[2], n1)]),
    ];
    Ok(PauliLubanski {
        k: *k,
        mass: kk.sqrt(),
        w: r.map(|x| times_minus_i(&x)),
        r,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpinKind {
    Longitudinal,
    CircularPlus,
    CircularMinus,
    Transverse,
    /// The unphysical direction ε ∝ k (k·ε ≠ 0).
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinMode {
    pub eigenvalue: f64,
    /// Components in the unnormalized closed form.
    pub polarization: ComplexFourVector,
    /// Unit hermitian length.
    pub normalized: ComplexFourVector,
    pub kind: SpinKind,
    /// True for modes with k·ε = 0, i.e. genuine Proca polarizations.
    pub physical: bool,
    /// False when the closed form was replaced by a numerical null vector.
    pub closed_form: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpinSpectrum {
    pub modes: Vec<SpinMode>,
    /// Set when a special-case parametrization was used (vanishing
    /// denominators of the general formulas, or a degenerate spectrum).
    pub degenerate: bool,
}

impl SpinSpectrum {
    pub fn physical(&self) -> impl Iterator<Item = &SpinMode> {
        self.modes.iter().filter(|m| m.physical)
    }
}

fn cv(a: [Complex64; 4]) -> ComplexFourVector {
    ComplexFourVector(a)
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub fn residual(w: &CMat4, lambda: f64, eps: &ComplexFourVector) -> f64 {
    (cmat_vec(w, eps) - eps.scale(re(lambda))).norm()
}

fn make(
    w: &CMat4,
    k: &FourVector,
    lambda: f64,
    eps: ComplexFourVector,
    kind: SpinKind,
) -> SpinMode {
    // Fall back to a numerical null vector should a closed form lose accuracy.
    let closed_form = residual(w, lambda, &eps) <= MODE_TOLERANCE * eps.norm();
    let eps = if closed_form {
        eps
    } else {
        let shifted: CMat4 = std::array::from_fn(|i| {
            std::array::from_fn(|j| w[i][j] - if i == j { re(lambda) } else { ZERO })
        });
        cv(complex_null_vector(&shifted))
    };
    let n = eps.norm();
    let kscale = k.euclidean_norm() * n;
    let physical = kind != SpinKind::Zero && eps.dot_real(k).norm() <= MODE_TOLERANCE * kscale;
    SpinMode {
        eigenvalue: lambda,
        polarization: eps,
        normalized: eps.scale(re(1.0 / n)),
        kind,
        physical,
        closed_form,
    }
}

fn small(x: f64, scale: f64) -> bool {
    x.abs() <= 1e-12 * scale
}

/// Eigenmodes of W³: λ = 0 (longitudinal), λ = ±√(k₀² − k₁² − k₂²) (circular),
/// and the unphysical kernel vector ε ∝ k.
pub fn eigenmodes_w3(k: &FourVector) -> Result<SpinSpectrum> {
    let pl = pauli_lubanski(k)?;
    let w = &pl.w[3];
    let [k0, k1, k2, k3] = k.0;
    let m = pl.mass;
    let scale = k.euclidean_norm();
    let lam = (k0 * k0 - k1 * k1 - k2 * k2).sqrt();
    let mut degenerate = false;
    let mut modes = Vec::with_capacity(4);
    for l in [lam, -lam] {
        let eps = if small(k1, scale) && small(k2, scale) {
            degenerate = true;
            cv([ZERO, re(1.0), -I * l / k0, ZERO])
        } else if small(k2, scale) {
            cv([re(k1), re(k0), -I * l, ZERO])
        } else if small(k1, scale) {
            cv([re(k2), I * l, re(k0), ZERO])
        } else {
            let e1 = (l * k0 - I * k1 * k2) / (l * k1 - I * k0 * k2);
            let e2 = (l * k0 + I * k1 * k2) / (l * k2 + I * k0 * k1);
            cv([re(1.0), e1, e2, ZERO])
        };
        let kind = if l > 0.0 {
            SpinKind::CircularPlus
        } else {
            SpinKind::CircularMinus
        };
        modes.push(make(w, k, l, eps, kind));
    }
    if small(k3, scale) {
        degenerate = true;
        modes.push(make(
            w,
            k,
            0.0,
            cv([ZERO, ZERO, ZERO, re(1.0)]),
            SpinKind::Transverse,
        ));
    } else {
        let eps = cv([re(k0), re(k1), re(k2), re((m * m + k3 * k3) / k3)]);
        modes.push(make(w, k, 0.0, eps, SpinKind::Longitudinal));
    }
    modes.push(make(w, k, 0.0, k.to_complex(), SpinKind::Zero));
    Ok(SpinSpectrum { modes, degenerate })
}

/// Eigenmodes of W⁰: λ = 0 with ε = ((k₀² − m²)/k₀, k⃗), helicity modes
/// λ = ±|k⃗| with ε₀ = 0, and the unphysical ε ∝ k. In the rest frame W⁰
/// vanishes; the three spatial axes are returned and the result is flagged.
pub fn eigenmodes_w0(k: &FourVector) -> Result<SpinSpectrum> {
    let pl = pauli_lubanski(k)?;
    let w = &pl.w[0];
    let [k0, k1, k2, k3] = k.0;
    let m = pl.mass;
    let scale = k.euclidean_norm();
    let kappa = (k1 * k1 + k2 * k2 + k3 * k3).sqrt();
    let mut modes = Vec::with_capacity(4);
    if small(kappa, scale) {
        for axis in 1..4 {
            let mut e = [ZERO; 4];
            e[axis] = re(1.0);
            modes.push(make(w, k, 0.0, cv(e), SpinKind::Transverse));
        }
        modes.push(make(w, k, 0.0, k.to_complex(), SpinKind::Zero));
        return Ok(SpinSpectrum {
            modes,
            degenerate: true,
        });
    }
    let mut degenerate = false;
    for l in [kappa, -kappa] {
        let eps = if small(k1, scale) && small(k2, scale) {
            degenerate = true;
            cv([ZERO, re(1.0), I * l / k3, ZERO])
        } else {
            let d = l * l - k3 * k3;
            cv([
                ZERO,
                (-k1 * k3 + I * l * k2) / d,
                (-k2 * k3 - I * l * k1) / d,
                re(1.0),
            ])
        };
        let kind = if l > 0.0 {
            SpinKind::CircularPlus
        } else {
            SpinKind::CircularMinus
        };
        modes.push(make(w, k, l, eps, kind));
    }
    let eps = cv([re((k0 * k0 - m * m) / k0), re(k1), re(k2), re(k3)]);
    modes.push(make(w, k, 0.0, eps, SpinKind::Longitudinal));
    modes.push(make(w, k, 0.0, k.to_complex(), SpinKind::Zero));
    Ok(SpinSpectrum { modes, degenerate })
}

/// Hermitian spin matrices of a plane wave.
///
/// `lower[i]` is S_i = (1/m)[W_i − W_0 k^i/(m + k₀)] with W_i = −W^i; these
/// satisfy [S_p, S_q] = iε_{pqr} S_r. The contravariant components S^i = −S_i
/// reduce to W^i/m in the rest frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinOperator {
    pub lower: [CMat4; 3],
}

impl SpinOperator {
    pub fn upper(&self) -> [CMat4; 3] {
        self.lower.map(|s| s.map(|row| row.map(|z| -z)))
    }
}

pub fn spin_operator(k: &FourVector) -> Result<SpinOperator> {
    let pl = pauli_lubanski(k)?;
    let m = pl.mass;
    let k0 = k[0];
    let lower = std::array::from_fn(|i| {
        let wi = &pl.w[i + 1];
        let w0 = &pl.w[0];
        let c = k[i + 1] / (m + k0);
        std::array::from_fn(|a| std::array::from_fn(|b| -(wi[a][b] + w0[a][b] * c) / m))
    });
    Ok(SpinOperator { lower })
}
