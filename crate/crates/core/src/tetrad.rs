//! Null tetrads adapted to the field tensor, and the eigenvectors of T_μν.
//!
//! A non-null field G is duality-rotated to its extremal form G', for which
//! E'·B' = 0 and a² = E'² − B'² > 0. G' acts as a boost generator on its
//! time-like two-plane (T, Z) and annihilates the space-like plane (X, Y); *G'
//! does the opposite with a rotation. In that frame the maxwellian half of ½T is
//! k[(TT − ZZ) + (XX + YY)] with k = a²/2.
//!
//! The tetrad is steered inside both planes so that the potential φ lies along
//! (T, X) (case i, time-like projection) or (Z, Y) (case ii, space-like
//! projection), which reduces the massive eigenproblem to a 2×2 block.
//!
//! Unless stated otherwise eigenvalues in [`EigenPair`] belong to the full
//! tensor T (the normalization of [`crate::stress`]); the roots `K` in
//! [`CaseEigensystem`] belong to ½T.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_mass, Error, Result};
use crate::linalg;
use crate::minkowski::{
    levi_civita, AntisymmetricTensor, ComplexFourVector, FourVector, Mat4, SymmetricTensor, METRIC,
    PLANE_TOLERANCE,
};

/// |v·v| ≤ CAUSAL_BAND·‖v‖² counts as null.
pub const CAUSAL_BAND: f64 = 1e-10;

/// Fields with k below this multiple of (E² + B²) are treated as null.
const NULL_FIELD: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrameTetrad {
    pub t: FourVector,
    pub z: FourVector,
    pub x: FourVector,
    pub y: FourVector,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NullTetrad {
    pub l: FourVector,
    pub n: FourVector,
    pub m: ComplexFourVector,
    pub m_bar: ComplexFourVector,
}

impl NullTetrad {
    /// Largest deviation from l·n = 1, m·m̄ = −1 and zero for the other eight
    /// products (bilinear, no conjugation).
    pub fn defect(&self) -> f64 {
        let (l, n) = (self.l.to_complex(), self.n.to_complex());
        let v = [l, n, self.m, self.m_bar];
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in i..4 {
                let target = match (i, j) {
                    (0, 1) => 1.0,
                    (2, 3) => -1.0,
                    _ => 0.0,
                };
                worst = worst.max((v[i].dot(&v[j]) - target).norm());
            }
        }
        worst
    }
}

impl FrameTetrad {
    pub const IDENTITY: FrameTetrad = FrameTetrad {
        t: FourVector([1.0, 0.0, 0.0, 0.0]),
        z: FourVector([0.0, 0.0, 0.0, 1.0]),
        x: FourVector([0.0, 1.0, 0.0, 0.0]),
        y: FourVector([0.0, 0.0, 1.0, 0.0]),
    };

    pub fn vectors(&self) -> [FourVector; 4] {
        [self.t, self.z, self.x, self.y]
    }

    /// Largest violation of the ten orthonormality relations.
    pub fn defect(&self) -> f64 {
        let v = self.vectors();
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in i..4 {
                let target = match (i, j) {
                    (0, 0) => 1.0,
                    (a, b) if a == b => -1.0,
                    _ => 0.0,
                };
                worst = worst.max((v[i].dot(&v[j]) - target).abs());
            }
        }
        worst
    }

    /// l = (T+Z)/√2, n = (T−Z)/√2, m = (X−iY)/√2, m̄ = (X+iY)/√2.
    pub fn null_basis(&self) -> NullTetrad {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let c = |x: &FourVector, y: &FourVector, s: f64| {
            ComplexFourVector(std::array::from_fn(|i| {
                Complex64::new(r * x[i], s * r * y[i])
            }))
        };
        NullTetrad {
            l: (self.t + self.z) * r,
            n: (self.t - self.z) * r,
            m: c(&self.x, &self.y, -1.0),
            m_bar: c(&self.x, &self.y, 1.0),
        }
    }

    /// Applies a Lorentz matrix to every leg.
    pub fn transform(&self, lambda: &Mat4) -> FrameTetrad {
        let f = |v: &FourVector| crate::minkowski::mat_vec(lambda, v);
        FrameTetrad {
            t: f(&self.t),
            z: f(&self.z),
            x: f(&self.x),
            y: f(&self.y),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    /// φ = αT + γX.
    I,
    /// φ = βZ + δY.
    Ii,
}

/// φ = αT + βZ + γX + δY on the steered tetrad; two of the four vanish.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecompositionCase {
    pub case_tag: CaseTag,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    /// Maxwellian eigenvalue magnitude of ½T.
    pub k: f64,
}

impl DecompositionCase {
    pub fn phi_norm2(&self) -> f64 {
        self.alpha * self.alpha
            - self.beta * self.beta
            - self.gamma * self.gamma
            - self.delta * self.delta
    }

    pub fn reconstruct(&self, tetrad: &FrameTetrad) -> FourVector {
        tetrad.t * self.alpha + tetrad.z * self.beta + tetrad.x * self.gamma + tetrad.y * self.delta
    }

    /// ‖φ − (case form)‖, using only the two coefficients the case allows.
    pub fn case_residual(&self, tetrad: &FrameTetrad, phi: &FourVector) -> f64 {
        let form = match self.case_tag {
            CaseTag::I => tetrad.t * self.alpha + tetrad.x * self.gamma,
            CaseTag::Ii => tetrad.z * self.beta + tetrad.y * self.delta,
        };
        (*phi - form).euclidean_norm()
    }

    /// The full T_μν this decomposition describes:
    /// 2{k[(TT − ZZ) + (XX + YY)] + m²φφ − ½m² (φ·φ) g}.
    pub fn model_tensor(&self, tetrad: &FrameTetrad, m: f64) -> SymmetricTensor {
        let phi = self.reconstruct(tetrad);
        let pn = self.phi_norm2();
        let maxwell = dyad(&tetrad.t) - dyad(&tetrad.z) + dyad(&tetrad.x) + dyad(&tetrad.y);
        let metric = SymmetricTensor::diagonal(METRIC);
        (maxwell * self.k + dyad(&phi) * (m * m) - metric * (0.5 * m * m * pn)) * 2.0
    }
}

/// v_μ v_ν.
pub fn dyad(v: &FourVector) -> SymmetricTensor {
    let l = v.lower();
    SymmetricTensor::from_fn(|i, j| l[i] * l[j])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Causal {
    Timelike,
    Spacelike,
    Null,
    /// Member of a repeated eigenspace; the direction is not determined.
    Degenerate,
}

pub fn classify(v: &FourVector) -> Causal {
    let n2 = v.norm2();
    let e2 = v.euclidean_norm().powi(2);
    if e2 == 0.0 || n2.abs() <= CAUSAL_BAND * e2 {
        Causal::Null
    } else if n2 > 0.0 {
        Causal::Timelike
    } else {
        Causal::Spacelike
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenPair {
    pub eigenvalue: f64,
    pub vector: FourVector,
    pub causal: Causal,
}

impl EigenPair {
    /// Normalizes `v`: time-like to E·E = 1 with E⁰ > 0, space-like to
    /// E·E = −1 with its largest component positive, null to unit Euclidean
    /// length with E⁰ ≥ 0.
    pub fn new(eigenvalue: f64, v: FourVector) -> EigenPair {
        let causal = classify(&v);
        let vector = canonical(&v, causal);
        EigenPair {
            eigenvalue,
            vector,
            causal,
        }
    }

    /// ‖T^μ_ν E^ν − Λ E^μ‖.
    pub fn residual(&self, t: &SymmetricTensor) -> f64 {
        (t.apply(&self.vector) - self.vector * self.eigenvalue).euclidean_norm()
    }
}

fn canonical(v: &FourVector, causal: Causal) -> FourVector {
    match causal {
        Causal::Timelike => {
            let u = *v * (1.0 / v.norm2().sqrt());
            if u[0] < 0.0 {
                -u
            } else {
                u
            }
        }
        Causal::Spacelike => {
            let u = *v * (1.0 / (-v.norm2()).sqrt());
            let lead = (0..4).fold(0, |b, i| if u[i].abs() > u[b].abs() { i } else { b });
            if u[lead] < 0.0 {
                -u
            } else {
                u
            }
        }
        Causal::Null | Causal::Degenerate => {
            let n = v.euclidean_norm();
            if n == 0.0 {
                return *v;
            }
            let u = *v * (1.0 / n);
            if u[0] < 0.0 {
                -u
            } else {
                u
            }
        }
    }
}

/// Duality angle making the rotated field extremal and electric-dominant:
/// θ = ½ atan2(2E·B, E² − B²), so that E'·B' = 0 and E'² − B'² = 2k ≥ 0.
///
/// The range is (−π/2, π/2]; the narrower (−π/4, π/4] cannot always deliver
/// an electric-dominant field (take pure B).
pub fn extremal_angle(g: &AntisymmetricTensor) -> Result<f64> {
    if !g.is_finite() {
        return Err(Error::Invalid("non-finite field tensor".into()));
    }
    if g.e.iter().chain(g.b.iter()).all(|&c| c == 0.0) {
        return Err(Error::Degenerate("field tensor vanishes"));
    }
    Ok(0.5 * (2.0 * g.e_dot_b()).atan2(g.electric_excess()))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TetradBuild {
    pub tetrad: FrameTetrad,
    pub decomposition: DecompositionCase,
    /// Extremal duality angle used.
    pub theta: f64,
    /// A plane had no φ component to steer by and was seeded from the
    /// coordinate axes (T from Π_t e₀, X or Y from the best Π_s eᵢ).
    pub fallback: bool,
}

fn relative_zero(v: &FourVector, scale: f64) -> bool {
    v.euclidean_norm() <= PLANE_TOLERANCE * scale
}

fn unit(v: &FourVector) -> Result<FourVector> {
    v.normalized(CAUSAL_BAND).ok_or(Error::Degenerate(
        "null direction where a unit vector is needed",
    ))
}

fn future(v: FourVector) -> FourVector {
    if v[0] < 0.0 {
        -v
    } else {
        v
    }
}

/// The projection of eᵢ (i = 1..3) with the largest Euclidean size.
fn best_axis(project: impl Fn(&FourVector) -> FourVector) -> FourVector {
    (1..4)
        .map(|i| project(&FourVector::basis(i)))
        .max_by(|a, b| a.euclidean_norm().total_cmp(&b.euclidean_norm()))
        .expect("three candidates")
}

/// Products of boosted legs are only known to ~ε|v||w|; a correction below
/// that is rounding noise, and applying it would inject an error of order
/// ε|v|³ (and break the common scale T and Z = G'T/a share).
const GRAM_NOISE: f64 = 8.0 * f64::EPSILON;

/// Minkowski Gram–Schmidt, time-like leg first, applied twice. Corrections
/// under the rounding floor of the products involved are skipped.
fn orthonormalize(t: FrameTetrad) -> Result<FrameTetrad> {
    let mut v = t.vectors();
    for _ in 0..2 {
        for i in 0..4 {
            let mut w = v[i];
            for j in 0..i {
                let c = w.dot(&v[j]);
                if c.abs() > GRAM_NOISE * w.euclidean_norm() * v[j].euclidean_norm() {
                    w = w - v[j] * (c / v[j].norm2());
                }
            }
            let n2 = w.norm2();
            let target = if i == 0 { 1.0 } else { -1.0 };
            v[i] = if (n2 - target).abs() > GRAM_NOISE * w.euclidean_norm().powi(2) {
                unit(&w)?
            } else {
                w
            };
        }
    }
    Ok(FrameTetrad {
        t: v[0],
        z: v[1],
        x: v[2],
        y: v[3],
    })
}

/// Builds the steered tetrad for a real field (G, φ).
pub fn tetrad_from_field(g: &AntisymmetricTensor, phi: &FourVector) -> Result<TetradBuild> {
    if !phi.is_finite() {
        return Err(Error::Invalid("non-finite potential".into()));
    }
    let theta = extremal_angle(g)?;
    let k = g.invariants().k;
    let size = 0.5 * g.norm().powi(2);
    if k <= NULL_FIELD * size {
        return Err(Error::Degenerate("null field (k = 0)"));
    }
    let gp = g.duality_rotate(theta);
    let dp = gp.dual();
    let a2 = 2.0 * k;
    let a = a2.sqrt();
    let proj_t = |v: &FourVector| gp.apply(&gp.apply(v)) * (1.0 / a2);
    let proj_s = |v: &FourVector| *v - proj_t(v);

    let phi_scale = phi.euclidean_norm();
    let phi_t = proj_t(phi);
    let phi_s = *phi - phi_t;
    let mut fallback = false;

    let (case_tag, t, z) = if phi_scale > 0.0 && !relative_zero(&phi_t, phi_scale) {
        match classify(&phi_t) {
            Causal::Timelike => {
                let t = future(unit(&phi_t)?);
                (CaseTag::I, t, gp.apply(&t) * (1.0 / a))
            }
            Causal::Spacelike => {
                let z = unit(&phi_t)?;
                let t = gp.apply(&z) * (1.0 / a);
                if t[0] < 0.0 {
                    (CaseTag::Ii, -t, -z)
                } else {
                    (CaseTag::Ii, t, z)
                }
            }
            _ => {
                return Err(Error::Degenerate(
                    "φ projects onto a null direction of the time-like plane",
                ))
            }
        }
    } else {
        fallback = true;
        let t = future(unit(&proj_t(&FourVector::basis(0)))?);
        (CaseTag::Ii, t, gp.apply(&t) * (1.0 / a))
    };

    let steer = if phi_scale > 0.0 && !relative_zero(&phi_s, phi_scale) {
        unit(&phi_s)?
    } else {
        fallback = true;
        unit(&best_axis(proj_s))?
    };
    let (x, y) = match case_tag {
        CaseTag::I => (steer, dp.apply(&steer) * (1.0 / a)),
        CaseTag::Ii => (dp.apply(&steer) * (-1.0 / a), steer),
    };

    let tetrad = orthonormalize(FrameTetrad { t, z, x, y })?;
    let decomposition = DecompositionCase {
        case_tag,
        alpha: phi.dot(&tetrad.t),
        beta: -phi.dot(&tetrad.z),
        gamma: -phi.dot(&tetrad.x),
        delta: -phi.dot(&tetrad.y),
        k,
    };
    Ok(TetradBuild {
        tetrad,
        decomposition,
        theta,
        fallback,
    })
}

/// Eigenvectors of the mixed tensor G^μ_ν.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NullEigenvectors {
    /// Eigenvalues ±a on the time-like plane.
    pub a: f64,
    /// Eigenvalues ±ib on the space-like plane.
    pub b: f64,
    /// (+a, l₊), (−a, l₋), normalized to l⁰ = 1.
    pub real: [(f64, FourVector); 2],
    /// (+ib, m₊), (−ib, m₋), normalized to m·m̄ = −1.
    pub complex: [(Complex64, ComplexFourVector); 2],
}

pub fn null_eigenvectors(g: &AntisymmetricTensor) -> Result<NullEigenvectors> {
    if !g.is_finite() {
        return Err(Error::Invalid("non-finite field tensor".into()));
    }
    let ex = g.electric_excess();
    let eb = g.e_dot_b();
    let root = ex.hypot(2.0 * eb);
    let size = 0.5 * g.norm().powi(2);
    if size == 0.0 || root <= NULL_FIELD * size {
        return Err(Error::Degenerate("null field has no invariant two-planes"));
    }
    // a² − b² = E² − B², ab = |E·B|, evaluated without cancellation.
    let (a2, b2) = if ex >= 0.0 {
        let a2 = 0.5 * (ex + root);
        (a2, eb * eb / a2)
    } else {
        let b2 = 0.5 * (root - ex);
        (eb * eb / b2, b2)
    };
    let (a, b) = (a2.sqrt(), b2.sqrt());
    let g2 = |v: &FourVector| g.apply(&g.apply(v));
    let proj_t = |v: &FourVector| (g2(v) + *v * b2) * (1.0 / (a2 + b2));
    let proj_s = |v: &FourVector| (*v * a2 - g2(v)) * (1.0 / (a2 + b2));
    let tiny = 1e-300_f64.max(f64::EPSILON * root.sqrt());

    let v = unit(&proj_t(&FourVector::basis(0)))?;
    let (lp, lm) = if a > tiny {
        let gv = g.apply(&v);
        (v * a + gv, v * a - gv)
    } else {
        let zc = best_axis(|e| {
            let p = proj_t(e);
            p - v * (p.dot(&v))
        });
        let z = unit(&zc)?;
        (v + z, v - z)
    };
    let lp = lp * (1.0 / lp[0]);
    let lm = lm * (1.0 / lm[0]);

    let w = unit(&best_axis(proj_s))?;
    let i = Complex64::new(0.0, 1.0);
    let (mp, mm) = if b > tiny {
        let gw = g.apply(&w);
        let mk = |s: f64| ComplexFourVector(std::array::from_fn(|n| b * w[n] - s * i * gw[n]));
        (mk(1.0), mk(-1.0))
    } else {
        let w2c = best_axis(|e| {
            let p = proj_s(e);
            p + w * (p.dot(&w))
        });
        let w2 = unit(&w2c)?;
        let mk = |s: f64| ComplexFourVector(std::array::from_fn(|n| w[n] + s * i * w2[n]));
        (mk(1.0), mk(-1.0))
    };
    let norm_m = |m: ComplexFourVector| {
        let h = m.hermitian_dot(&m).re;
        m.scale(Complex64::new(1.0 / (-h).sqrt(), 0.0))
    };
    Ok(NullEigenvectors {
        a,
        b,
        real: [(a, lp), (-a, lm)],
        complex: [(i * b, norm_m(mp)), (-i * b, norm_m(mm))],
    })
}

/// Eigenpairs of [[p, q], [r, s]] sorted by descending eigenvalue.
fn eig2(p: f64, q: f64, r: f64, s: f64) -> [(f64, [f64; 2]); 2] {
    let mean = 0.5 * (p + s);
    let half = 0.5 * (p - s);
    let disc = half * half + q * r;
    debug_assert!(
        disc >= -1e-12 * (half * half + (q * r).abs()),
        "complex 2×2 spectrum"
    );
    let rad = disc.max(0.0).sqrt();
    [mean + rad, mean - rad].map(|lam| {
        let c1 = [q, lam - p];
        let c2 = [lam - s, r];
        let n1 = c1[0].hypot(c1[1]);
        let n2 = c2[0].hypot(c2[1]);
        let v = if n1 >= n2 { c1 } else { c2 };
        if n1.max(n2) == 0.0 {
            // Scalar matrix: any vector; pick by position.
            (
                lam,
                if lam == mean + rad {
                    [1.0, 0.0]
                } else {
                    [0.0, 1.0]
                },
            )
        } else {
            (lam, v)
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CaseEigensystem {
    /// Eigenpairs of the full T, sorted by descending eigenvalue.
    pub pairs: [EigenPair; 4],
    /// Roots K of the 2×2 block (½T scale, before the −½m²φ·φ shift), descending.
    pub roots: [f64; 2],
    /// ½m²φ·φ.
    pub shift: f64,
}

impl CaseEigensystem {
    pub fn timelike(&self) -> Option<&EigenPair> {
        self.pairs.iter().find(|p| p.causal == Causal::Timelike)
    }
}

/// Closed-form eigensystem of the tensor described by `decomp` on `tetrad`.
///
/// Case (i) couples (T, X) through [[k + m²α², −m²αγ], [m²αγ, −k − m²γ²]] while
/// Z and Y keep K = ±k; case (ii) couples (Z, Y) through
/// [[k − m²β², −m²βδ], [−m²βδ, −k − m²δ²]] while T and X keep K = ±k. Each
/// root K becomes the full-T eigenvalue 2K − m²φ·φ.
pub fn eigensystem_case(
    tetrad: &FrameTetrad,
    decomp: &DecompositionCase,
    m: f64,
) -> Result<CaseEigensystem> {
    ensure_mass(m)?;
    let k = decomp.k;
    let m2 = m * m;
    let shift = 0.5 * m2 * decomp.phi_norm2();
    let full = |kk: f64| 2.0 * (kk - shift);
    let (a, b, c, d) = (decomp.alpha, decomp.beta, decomp.gamma, decomp.delta);
    let (block, e1, e2, plus, minus) = match decomp.case_tag {
        CaseTag::I => (
            eig2(k + m2 * a * a, -m2 * a * c, m2 * a * c, -k - m2 * c * c),
            tetrad.t,
            tetrad.x,
            tetrad.z,
            tetrad.y,
        ),
        CaseTag::Ii => (
            eig2(k - m2 * b * b, -m2 * b * d, -m2 * b * d, -k - m2 * d * d),
            tetrad.z,
            tetrad.y,
            tetrad.t,
            tetrad.x,
        ),
    };
    let mut pairs = [
        EigenPair::new(full(block[0].0), e1 * block[0].1[0] + e2 * block[0].1[1]),
        EigenPair::new(full(block[1].0), e1 * block[1].1[0] + e2 * block[1].1[1]),
        EigenPair::new(full(k), plus),
        EigenPair::new(full(-k), minus),
    ];
    pairs.sort_by(|p, q| q.eigenvalue.total_cmp(&p.eigenvalue));
    Ok(CaseEigensystem {
        pairs,
        roots: [block[0].0, block[1].0],
        shift,
    })
}

/// The time-like plane Ω shared by two tetrads' (T, Z) planes.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommonPlane {
    pub t_hat: FourVector,
    pub z_hat: FourVector,
    pub theta1: f64,
    pub theta2: f64,
}

impl CommonPlane {
    /// cosh θᵢ t̂ + sinh θᵢ ẑ: the member of each time-like plane lying in Ω.
    pub fn time_vector(&self, theta: f64) -> FourVector {
        self.t_hat * theta.cosh() + self.z_hat * theta.sinh()
    }

    /// Boosts (t̂, ẑ) within Ω so that θ₁′ = −θ₂′ = (θ₁ − θ₂)/2.
    pub fn balanced(&self) -> CommonPlane {
        let w = 0.5 * (self.theta1 + self.theta2);
        let (ch, sh) = (w.cosh(), w.sinh());
        CommonPlane {
            t_hat: self.t_hat * ch + self.z_hat * sh,
            z_hat: self.t_hat * sh + self.z_hat * ch,
            theta1: self.theta1 - w,
            theta2: self.theta2 - w,
        }
    }
}

/// Ω meets each time-like plane Pᵢ = span(Tᵢ, Zᵢ) in a time-like line. It is
/// found from the principal directions of Π₁Π₂ on P₁; the partner in P₂ is the
/// projection of that direction. The frame returned has θ₁ = 0 and θ₂ ≥ 0.
pub fn common_plane(tetrad1: &FrameTetrad, tetrad2: &FrameTetrad) -> Result<CommonPlane> {
    let (t1, z1, t2, z2) = (tetrad1.t, tetrad1.z, tetrad2.t, tetrad2.z);
    let proj = |v: &FourVector, t: &FourVector, z: &FourVector| *t * v.dot(t) - *z * v.dot(z);
    let same = (proj(&t2, &t1, &z1) - t2)
        .euclidean_norm()
        .max((proj(&z2, &t1, &z1) - z2).euclidean_norm());
    if same <= PLANE_TOLERANCE * (1.0 + t2.euclidean_norm().max(z2.euclidean_norm())) {
        let sh = -t2.dot(&z1);
        return Ok(CommonPlane {
            t_hat: t1,
            z_hat: z1,
            theta1: 0.0,
            theta2: sh.asinh(),
        });
    }
    // Π₁Π₂ on P₁ in (T₁, Z₁) coordinates (v = pT₁ + qZ₁ ⇒ p = v·T₁, q = −v·Z₁).
    let coords = |v: &FourVector| [v.dot(&t1), -v.dot(&z1)];
    let c0 = coords(&proj(&proj(&t1, &t2, &z2), &t1, &z1));
    let c1 = coords(&proj(&proj(&z1, &t2, &z2), &t1, &z1));
    let (p, q, r, s) = (c0[0], c1[0], c0[1], c1[1]);
    let half = 0.5 * (p - s);
    if half * half + q * r < -1e-12 {
        return Err(Error::Degenerate(
            "time-like planes share no common time-like direction",
        ));
    }
    let candidates = eig2(p, q, r, s);
    let timelike: Vec<FourVector> = candidates
        .iter()
        .map(|(_, v)| t1 * v[0] + z1 * v[1])
        .filter(|v| classify(v) == Causal::Timelike)
        .collect();
    let u1 = match timelike.as_slice() {
        [u] => future(unit(u)?),
        _ => return Err(Error::Degenerate("no unique time-like principal direction")),
    };
    let w = proj(&u1, &t2, &z2);
    if classify(&w) != Causal::Timelike {
        return Err(Error::Degenerate(
            "projection into the second plane is not time-like",
        ));
    }
    let u2 = future(unit(&w)?);
    // cosh θ − 1 = −½(u₂ − u₁)², free of the cancellation in u₁·u₂ − 1.
    let d = u2 - u1;
    let x = -0.5 * d.norm2();
    let sh2 = x * (2.0 + x);
    if sh2 > 1e-20 {
        let sh = sh2.sqrt();
        // (u₂ − u₁ cosh θ)/sinh θ, re-orthonormalized against u₁: at small θ
        // the quotient magnifies the rounding in u₂ by 1/sinh θ.
        let z = (d - u1 * x) * (1.0 / sh);
        let z = unit(&(z + u1 * (-z.dot(&u1))))?;
        return Ok(CommonPlane {
            t_hat: u1,
            z_hat: z,
            theta1: 0.0,
            theta2: sh.asinh(),
        });
    }
    // The planes share u₁; ẑ is the direction orthogonal to u₁ and both Zs.
    let zz1 = unit(&(z1 - u1 * (z1.dot(&u1))))?;
    let zz2 = unit(&(z2 - u1 * (z2.dot(&u1))))?;
    let mut n = FourVector::ZERO;
    for mu in 0..4 {
        let mut acc = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    acc += levi_civita([mu, a, b, c]) * u1[a] * zz1[b] * zz2[c];
                }
            }
        }
        n[mu] = METRIC[mu] * acc;
    }
    Ok(CommonPlane {
        t_hat: u1,
        z_hat: unit(&n)?,
        theta1: 0.0,
        theta2: 0.0,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MasslessEigensystem {
    pub timelike: EigenPair,
    pub spacelike: EigenPair,
    /// Velocity of the time-like eigenvector relative to t̂.
    pub tanh_theta: f64,
    /// tanh 2θ′ measured in the balanced frame.
    pub tanh_2theta_balanced: f64,
}

/// Ω-block of 2k₁T(1)T(1) + 2k₂T(2)T(2) in (t̂, ẑ) coordinates:
/// [[K + C, −S], [S, K − C]] with K = k₁ + k₂, C = Σ kᵢ cosh 2θᵢ,
/// S = Σ kᵢ sinh 2θᵢ.
pub fn massless_block(k1: f64, k2: f64, theta1: f64, theta2: f64) -> [[f64; 2]; 2] {
    let kk = k1 + k2;
    let c = k1 * (2.0 * theta1).cosh() + k2 * (2.0 * theta2).cosh();
    let s = k1 * (2.0 * theta1).sinh() + k2 * (2.0 * theta2).sinh();
    [[kk + c, -s], [s, kk - c]]
}

/// Λ± = (k₁ + k₂) ± √(C² − S²). Since C ≥ |S| and C² − S² ≥ (k₁ + k₂)², the
/// bracket is real and Λ₋ ≤ 0 ≤ Λ₊ for all non-negative k₁, k₂. The time-like
/// eigenvector has tanh θ = S/(C + R), R = √(C² − S²).
pub fn eigensystem_complex_massless(
    k1: f64,
    k2: f64,
    plane: &CommonPlane,
) -> Result<MasslessEigensystem> {
    if !(k1.is_finite() && k2.is_finite()) || k1 < 0.0 || k2 < 0.0 {
        return Err(Error::Invalid(format!(
            "maxwellian magnitudes must be finite and ≥ 0, got {k1}, {k2}"
        )));
    }
    if k1 == 0.0 && k2 == 0.0 {
        return Err(Error::Invalid("k1 = k2 = 0 has no time-like plane".into()));
    }
    let solve = |th1: f64, th2: f64| {
        let kk = k1 + k2;
        let c = k1 * (2.0 * th1).cosh() + k2 * (2.0 * th2).cosh();
        let s = k1 * (2.0 * th1).sinh() + k2 * (2.0 * th2).sinh();
        // C² − S² = k₁² + k₂² + 2k₁k₂ cosh 2(θ₁ − θ₂), free of cancellation.
        let r = (k1 * k1 + k2 * k2 + 2.0 * k1 * k2 * (2.0 * (th1 - th2)).cosh()).sqrt();
        (kk, c, s, r)
    };
    let (kk, c, s, r) = solve(plane.theta1, plane.theta2);
    let tanh_theta = s / (c + r);
    let th = tanh_theta.atanh();
    let timelike = EigenPair::new(kk + r, plane.time_vector(th));
    let spacelike = EigenPair::new(kk - r, plane.t_hat * th.sinh() + plane.z_hat * th.cosh());
    let bal = plane.balanced();
    let (_, cb, sb, _) = solve(bal.theta1, bal.theta2);
    Ok(MasslessEigensystem {
        timelike,
        spacelike,
        tanh_theta,
        tanh_2theta_balanced: sb / cb,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TimelikeEigen {
    Unique(EigenPair),
    /// A repeated eigenspace contains time-like directions.
    Degenerate {
        eigenvalue: f64,
        dimension: usize,
    },
    /// No real time-like eigenvector: no causal flow at this event.
    None,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericEigensystem {
    /// Real eigenpairs, by descending eigenvalue.
    pub pairs: Vec<EigenPair>,
    /// Eigenvalues with non-negligible imaginary part.
    pub complex: Vec<Complex64>,
    pub timelike: TimelikeEigen,
}

impl NumericEigensystem {
    pub fn timelike_pair(&self) -> Option<&EigenPair> {
        match &self.timelike {
            TimelikeEigen::Unique(p) => Some(p),
            _ => None,
        }
    }
}

/// Cyclic Jacobi on the leading n×n block of a symmetric matrix.
fn jacobi(mut a: [[f64; 4]; 4], n: usize) -> ([f64; 4], [[f64; 4]; 4]) {
    let mut v = [[0.0; 4]; 4];
    (0..4).for_each(|i| v[i][i] = 1.0);
    for _ in 0..50 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j].powi(2))
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let th = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
                let t = th.signum() / (th.abs() + (th * th + 1.0).sqrt());
                let t = if th == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[k][p], v[k][q]);
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    (std::array::from_fn(|i| a[i][i]), v)
}

/// General eigen-solve of the mixed tensor T^μ_ν.
pub fn eigensystem_numeric(t: &SymmetricTensor) -> Result<NumericEigensystem> {
    if !t.is_finite() {
        return Err(Error::Invalid("non-finite stress tensor".into()));
    }
    let eig = linalg::eigen(&t.mixed())?;
    let mut pairs = Vec::new();
    let mut timelike = Vec::new();
    let mut degenerate = None;
    for space in &eig.real {
        let vs: Vec<FourVector> = space.vectors.iter().map(|v| FourVector(*v)).collect();
        if vs.len() == 1 {
            let p = EigenPair::new(space.value, vs[0]);
            if p.causal == Causal::Timelike {
                timelike.push(p);
            }
            pairs.push(p);
            continue;
        }
        // Minkowski-orthogonal basis of the eigenspace via its Gram matrix.
        let n = vs.len();
        let mut gram = [[0.0; 4]; 4];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = vs[i].dot(&vs[j]);
            }
        }
        let (w, rot) = jacobi(gram, n);
        for (i, wi) in w.iter().enumerate().take(n) {
            let mut v = FourVector::ZERO;
            for (j, vj) in vs.iter().enumerate() {
                v += *vj * rot[j][i];
            }
            if *wi > CAUSAL_BAND {
                degenerate = Some((space.value, n));
            }
            let vector = canonical(&v, classify(&v));
            pairs.push(EigenPair {
                eigenvalue: space.value,
                vector,
                causal: Causal::Degenerate,
            });
        }
    }
    pairs.sort_by(|p, q| q.eigenvalue.total_cmp(&p.eigenvalue));
    let timelike = match (timelike.as_slice(), degenerate) {
        (_, Some((eigenvalue, dimension))) => TimelikeEigen::Degenerate {
            eigenvalue,
            dimension,
        },
        ([p], None) => TimelikeEigen::Unique(*p),
        ([], None) => TimelikeEigen::None,
        ([p, ..], None) => TimelikeEigen::Degenerate {
            eigenvalue: p.eigenvalue,
            dimension: timelike.len(),
        },
    };
    Ok(NumericEigensystem {
        pairs,
        complex: eig.complex,
        timelike,
    })
}

/// Angle between two directions, insensitive to sign and scale.
pub fn axis_angle(a: &FourVector, b: &FourVector) -> f64 {
    let (na, nb) = (a.euclidean_norm(), b.euclidean_norm());
    let c: f64 = (0..4).map(|i| a[i] * b[i]).sum::<f64>() / (na * nb);
    let s = {
        // |a × b| in R⁴ via Lagrange's identity, stable for small angles.
        let mut acc = 0.0;
        for i in 0..4 {
            for j in (i + 1)..4 {
                acc += (a[i] * b[j] - a[j] * b[i]).powi(2);
            }
        }
        acc.sqrt() / (na * nb)
    };
    s.atan2(c.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::standing_wave_spin_up;
    use crate::minkowski::{mat_mul, rotation_matrix, velocity_boost};
    use crate::stress::{maxwellian, stress_real};
    use proptest::prelude::*;

    fn arb_tensor() -> impl Strategy<Value = AntisymmetricTensor> {
        (
            prop::array::uniform3(-2.0..2.0f64),
            prop::array::uniform3(-2.0..2.0f64),
        )
            .prop_map(|(e, b)| AntisymmetricTensor::new(e, b))
    }

    fn arb_vec() -> impl Strategy<Value = FourVector> {
        prop::array::uniform4(-2.0..2.0f64).prop_map(FourVector)
    }

    fn arb_lorentz() -> impl Strategy<Value = Mat4> {
        (
            prop::array::uniform3(-3.2..3.2f64),
            prop::array::uniform3(-0.55..0.55f64),
        )
            .prop_map(|(w, b)| mat_mul(&velocity_boost(b).unwrap(), &rotation_matrix(w)))
    }

    fn arb_case() -> impl Strategy<Value = (FrameTetrad, DecompositionCase, f64)> {
        (
            arb_lorentz(),
            any::<bool>(),
            prop::array::uniform2(-1.5..1.5f64),
            0.05..2.0f64,
            0.2..2.0f64,
        )
            .prop_map(|(l, first, c, k, m)| {
                let tetrad = FrameTetrad::IDENTITY.transform(&l);
                let d = if first {
                    DecompositionCase {
                        case_tag: CaseTag::I,
                        alpha: c[0],
                        beta: 0.0,
                        gamma: c[1],
                        delta: 0.0,
                        k,
                    }
                } else {
                    DecompositionCase {
                        case_tag: CaseTag::Ii,
                        alpha: 0.0,
                        beta: c[0],
                        gamma: 0.0,
                        delta: c[1],
                        k,
                    }
                };
                (tetrad, d, m)
            })
    }

    /// Minkowski-symmetric matrices have distinct-eigenvalue eigenvectors
    /// orthogonal; match each closed-form pair to a numeric one by eigenvalue.
    fn assert_same_spectrum(closed: &[EigenPair], numeric: &NumericEigensystem, scale: f64) {
        assert!(numeric.complex.is_empty());
        for p in closed {
            let q = numeric
                .pairs
                .iter()
                .min_by(|a, b| {
                    (a.eigenvalue - p.eigenvalue)
                        .abs()
                        .total_cmp(&(b.eigenvalue - p.eigenvalue).abs())
                })
                .unwrap();
            assert!(
                (q.eigenvalue - p.eigenvalue).abs() <= 1e-9 * scale,
                "{} vs {}",
                p.eigenvalue,
                q.eigenvalue
            );
        }
    }

    #[test]
    fn extremal_angle_examples() {
        let g = AntisymmetricTensor::new([2.0, 0.0, 0.0], [0.0, 1.0, 0.0]);
        assert_eq!(extremal_angle(&g).unwrap(), 0.0);
        let g = AntisymmetricTensor::new([1.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
        assert!((extremal_angle(&g).unwrap() - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        assert_eq!(
            extremal_angle(&AntisymmetricTensor::ZERO),
            Err(Error::Degenerate("field tensor vanishes"))
        );
        // Pure magnetic needs a quarter turn.
        let g = AntisymmetricTensor::new([0.0; 3], [0.0, 0.0, 1.0]);
        let rot = g.duality_rotate(extremal_angle(&g).unwrap());
        assert!((rot.e[2] - 1.0).abs() < 1e-15 && rot.b[2].abs() < 1e-15);
    }

    #[test]
    fn null_field_rejected() {
        let g = AntisymmetricTensor::new([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]);
        assert!(matches!(
            tetrad_from_field(&g, &FourVector::basis(0)),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(null_eigenvectors(&g), Err(Error::Degenerate(_))));
    }

    #[test]
    fn pure_electric_null_vectors() {
        let g = AntisymmetricTensor::new([1.0, 0.0, 0.0], [0.0; 3]);
        let nv = null_eigenvectors(&g).unwrap();
        assert_eq!(nv.a, 1.0);
        assert!((nv.real[0].1 - FourVector::new(1.0, 1.0, 0.0, 0.0)).euclidean_norm() < 1e-15);
        assert!((nv.real[1].1 - FourVector::new(1.0, -1.0, 0.0, 0.0)).euclidean_norm() < 1e-15);
        assert_eq!(nv.b, 0.0);
    }

    #[test]
    fn worked_example_tetrads_at_origin() {
        let (k1, m) = (0.2f64, 1.0f64);
        let k0 = (k1 * k1 + m * m).sqrt();
        let smp = standing_wave_spin_up(k1, k1, m)
            .unwrap()
            .evaluate(&FourVector::ZERO);
        let r = std::f64::consts::FRAC_1_SQRT_2;

        let real = tetrad_from_field(&smp.g_r, &smp.phi_r).unwrap();
        assert!(real.fallback);
        assert!((real.tetrad.t - FourVector::basis(0)).euclidean_norm() < 1e-12);
        assert!((real.tetrad.z - FourVector::new(0.0, r, -r, 0.0)).euclidean_norm() < 1e-12);
        // Null vectors (1, ±c₂, ∓c₁, 0)/√C with eigenvalues ±mk₀√C, C = 2.
        let nv = null_eigenvectors(&smp.g_r).unwrap();
        assert!((nv.a - m * k0 * 2f64.sqrt()).abs() < 1e-12);
        assert!((nv.real[0].1 - FourVector::new(1.0, r, -r, 0.0)).euclidean_norm() < 1e-12);
        assert!((nv.real[1].1 - FourVector::new(1.0, -r, r, 0.0)).euclidean_norm() < 1e-12);

        let imag = tetrad_from_field(&smp.g_i, &smp.phi_i).unwrap();
        assert!((imag.tetrad.t - FourVector::basis(0)).euclidean_norm() < 1e-12);
        // X̂_R ⊥ X̂_I in the worked example's naming (our Z legs).
        assert!(real.tetrad.z.dot(&imag.tetrad.z).abs() < 1e-12);
    }

    #[test]
    fn maxwellian_limit_gives_doubled_k() {
        let d = DecompositionCase {
            case_tag: CaseTag::I,
            alpha: 0.0,
            beta: 0.0,
            gamma: 0.0,
            delta: 0.0,
            k: 0.7,
        };
        let es = eigensystem_case(&FrameTetrad::IDENTITY, &d, 1.0).unwrap();
        let vals: Vec<f64> = es.pairs.iter().map(|p| p.eigenvalue).collect();
        assert_eq!(vals, vec![1.4, 1.4, -1.4, -1.4]);
    }

    #[test]
    fn case_one_roots_match_bisection() {
        let (k, m, alpha, gamma) = (1.0, 1.0, 0.5, 0.3);
        let d = DecompositionCase {
            case_tag: CaseTag::I,
            alpha,
            beta: 0.0,
            gamma,
            delta: 0.0,
            k,
        };
        let es = eigensystem_case(&FrameTetrad::IDENTITY, &d, m).unwrap();
        let f = |x: f64| (x - 1.0 - 0.25) * (x + 1.0 + 0.09) + 0.0225;
        let bisect = |mut lo: f64, mut hi: f64| {
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if f(lo).signum() == f(mid).signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        };
        // f is an upward parabola with its vertex at K = 0.08, where f < 0.
        let (hi_root, lo_root) = (bisect(0.08, 10.0), bisect(-10.0, 0.08));
        assert!((es.roots[0] - hi_root).abs() < 1e-13);
        assert!((es.roots[1] - lo_root).abs() < 1e-13);
        for kk in es.roots {
            let lhs = alpha * alpha * (kk + k) - gamma * gamma * (kk - k);
            assert!((lhs - (kk * kk - k * k) / (m * m)).abs() < 1e-13);
        }
        let t = es.timelike().unwrap();
        let shift = 0.5 * m * m * d.phi_norm2();
        assert!((t.eigenvalue - 2.0 * (hi_root - shift)).abs() < 1e-12);
    }

    #[test]
    fn case_two_time_leg_is_timelike() {
        let d = DecompositionCase {
            case_tag: CaseTag::Ii,
            alpha: 0.0,
            beta: 0.4,
            gamma: 0.0,
            delta: -0.8,
            k: 0.5,
        };
        let es = eigensystem_case(&FrameTetrad::IDENTITY, &d, 1.3).unwrap();
        let t = es.timelike().unwrap();
        assert_eq!(t.vector, FourVector::basis(0));
        assert_eq!(
            es.pairs
                .iter()
                .filter(|p| p.causal == Causal::Timelike)
                .count(),
            1
        );
    }

    #[test]
    fn perfect_fluid() {
        let t = SymmetricTensor::diagonal([3.0, -1.0, -1.0, -1.0]);
        let es = eigensystem_numeric(&t).unwrap();
        let p = es.timelike_pair().unwrap();
        assert!((p.eigenvalue - 3.0).abs() < 1e-14);
        assert!((p.vector - FourVector::basis(0)).euclidean_norm() < 1e-14);
    }

    #[test]
    fn pure_maxwellian_is_degenerate() {
        let g = AntisymmetricTensor::new([0.0, 0.0, 1.0], [0.0; 3]);
        let es = eigensystem_numeric(&maxwellian(&g)).unwrap();
        assert!(matches!(
            es.timelike,
            TimelikeEigen::Degenerate { dimension: 2, .. }
        ));
    }

    #[test]
    fn no_real_timelike_eigenvector() {
        // T^0_1 = −T^1_0 makes a rotation-like block in (t, x).
        let t = SymmetricTensor::from_fn(|i, j| match (i, j) {
            (0, 1) => 1.0,
            (2, 2) | (3, 3) => 1.0,
            _ => 0.0,
        });
        let es = eigensystem_numeric(&t).unwrap();
        assert_eq!(es.complex.len(), 2);
        assert_eq!(es.timelike, TimelikeEigen::None);
    }

    #[test]
    fn identical_and_boosted_planes() {
        let f = FrameTetrad::IDENTITY;
        let p = common_plane(&f, &f).unwrap();
        assert_eq!((p.theta1, p.theta2), (0.0, 0.0));
        assert_eq!(p.t_hat, f.t);
        let w = 0.8;
        let l = crate::minkowski::boost_matrix(&f.t, &f.z, w).unwrap();
        let p = common_plane(&f, &f.transform(&l)).unwrap();
        assert!((p.theta2 - p.theta1 - w).abs() < 1e-12);
        assert!((f.t.dot(&f.transform(&l).t) - w.cosh()).abs() < 1e-12);
        let b = p.balanced();
        assert!((b.theta1 + b.theta2).abs() < 1e-15);
        assert!((b.theta1 - (p.theta1 - p.theta2) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn massless_limits() {
        let p = CommonPlane {
            t_hat: FourVector::basis(0),
            z_hat: FourVector::basis(3),
            theta1: 0.0,
            theta2: 0.0,
        };
        let e = eigensystem_complex_massless(0.3, 0.5, &p).unwrap();
        assert_eq!(e.tanh_theta, 0.0);
        assert!(
            (e.timelike.eigenvalue - 1.6).abs() < 1e-15 && e.spacelike.eigenvalue.abs() < 1e-15
        );
        assert_eq!(e.timelike.vector, FourVector::basis(0));
        let p = CommonPlane {
            theta1: 0.7,
            theta2: -0.2,
            ..p
        };
        let e = eigensystem_complex_massless(0.9, 0.0, &p).unwrap();
        assert!((e.timelike.vector - p.time_vector(0.7)).euclidean_norm() < 1e-12);
        assert!((e.timelike.eigenvalue - 1.8).abs() < 1e-12);
        assert!(eigensystem_complex_massless(0.0, 0.0, &p).is_err());
        assert!(eigensystem_complex_massless(-1.0, 0.5, &p).is_err());
    }

    proptest! {
        #[test]
        fn extremal_rotation_kills_mixed_invariant(g in arb_tensor()) {
            let th = extremal_angle(&g).unwrap();
            prop_assert!(th > -std::f64::consts::FRAC_PI_2 - 1e-15 && th <= std::f64::consts::FRAC_PI_2);
            let r = g.duality_rotate(th);
            prop_assert!(r.invariants().s2.abs() <= 1e-12 * g.norm().powi(2));
            prop_assert!(r.electric_excess() >= -1e-12 * g.norm().powi(2));
        }

        #[test]
        fn tetrads_are_orthonormal(g in arb_tensor(), phi in arb_vec()) {
            let b = tetrad_from_field(&g, &phi).unwrap();
            // Evaluating v·w in f64 costs ~ε|v||w|; legs get large when φ's
            // time-plane part is close to null, so the bound follows their size.
            let size = b.tetrad.vectors().iter().map(|v| v.euclidean_norm()).fold(1.0, f64::max);
            let floor = 32.0 * f64::EPSILON * size * size;
            prop_assert!(b.tetrad.defect() <= floor, "defect {} at size {}", b.tetrad.defect(), size);
            prop_assert!(b.tetrad.null_basis().defect() <= floor, "null defect {} at size {}", b.tetrad.null_basis().defect(), size);
            prop_assert!(b.tetrad.t[0] > 0.0);
            let d = b.decomposition;
            prop_assert!(d.case_residual(&b.tetrad, &phi) <= 1e-10f64.max(floor) * (1.0 + phi.euclidean_norm()));
            // The tetrad diagonalizes the maxwellian half: ½T = k[(TT − ZZ) + (XX + YY)].
            let t = b.tetrad;
            let model = (dyad(&t.t) - dyad(&t.z) + dyad(&t.x) + dyad(&t.y)) * d.k;
            let half = maxwellian(&g) * 0.5;
            prop_assert!(half.max_abs_diff(&model) <= 1e-10f64.max(floor) * (1.0 + g.norm().powi(2)), "diff {} size {}", half.max_abs_diff(&model), size);
        }

        #[test]
        fn model_tensor_is_the_stress_tensor(g in arb_tensor(), phi in arb_vec(), m in 0.2..2.0f64) {
            let b = tetrad_from_field(&g, &phi).unwrap();
            let model = b.decomposition.model_tensor(&b.tetrad, m);
            let direct = stress_real(&g, &phi, m);
            // Dyads of boosted legs carry ~ε|v|² rounding.
            let size = b.tetrad.vectors().iter().map(|v| v.euclidean_norm()).fold(1.0, f64::max);
            let floor = 1e-10f64.max(32.0 * f64::EPSILON * size * size);
            prop_assert!(model.max_abs_diff(&direct) <= floor * (1.0 + direct.norm()));
        }

        #[test]
        fn null_eigenvectors_solve(g in arb_tensor()) {
            let nv = null_eigenvectors(&g).unwrap();
            let sc = 1.0 + g.norm();
            for (lam, v) in nv.real {
                prop_assert!((g.apply(&v) - v * lam).euclidean_norm() <= 1e-10 * sc * v.euclidean_norm());
                prop_assert!(v.norm2().abs() <= 1e-10 * v.euclidean_norm().powi(2));
            }
            prop_assert_eq!(nv.real[0].0, -nv.real[1].0);
            let gm = g.mixed();
            for (lam, v) in nv.complex {
                let gv = ComplexFourVector(std::array::from_fn(|i| (0..4).map(|j| v.0[j] * gm[i][j]).sum()));
                let res = (gv - v.scale(lam)).norm();
                prop_assert!(res <= 1e-10 * sc * v.norm());
                prop_assert!(v.dot(&v).norm() <= 1e-10 * v.norm().powi(2));
            }
            prop_assert_eq!(nv.complex[0].0, -nv.complex[1].0);
        }

        #[test]
        fn case_closed_form_matches_numeric((tetrad, d, m) in arb_case()) {
            let closed = eigensystem_case(&tetrad, &d, m).unwrap();
            let t = d.model_tensor(&tetrad, m);
            let numeric = eigensystem_numeric(&t).unwrap();
            let scale = 1.0 + t.norm();
            assert_same_spectrum(&closed.pairs, &numeric, scale);
            for p in &closed.pairs {
                prop_assert!(p.residual(&t) <= 1e-9 * scale * p.vector.euclidean_norm());
            }
            let ct = closed.timelike().unwrap();
            match numeric.timelike {
                TimelikeEigen::Unique(nt) => {
                    // The direction is only determined to ~ε|T||v|²/gap.
                    let gap = closed.pairs.iter().map(|o| (o.eigenvalue - ct.eigenvalue).abs()).filter(|d| *d > 0.0).fold(f64::INFINITY, f64::min);
                    if f64::EPSILON * scale * nt.vector.euclidean_norm().powi(2) / gap <= 1e-10 {
                        prop_assert!(axis_angle(&ct.vector, &nt.vector) <= 1e-8);
                    }
                    prop_assert!((ct.eigenvalue - nt.eigenvalue).abs() <= 1e-9 * scale);
                }
                // Small α or γ puts the coupled root on top of ±k: the solver
                // merges them, and the closed-form time leg lies in that space.
                TimelikeEigen::Degenerate { eigenvalue, dimension } => {
                    prop_assert!((ct.eigenvalue - eigenvalue).abs() <= 1e-9 * scale);
                    let near = closed.pairs.iter().filter(|p| (p.eigenvalue - eigenvalue).abs() <= 1e-9 * scale).count();
                    prop_assert!(near >= dimension, "{near} closed-form roots for a {dimension}-fold space");
                }
                TimelikeEigen::None => prop_assert!(false, "closed form has a time-like leg, solver none"),
            }
        }

        #[test]
        fn distinct_eigenvectors_are_orthogonal(g in arb_tensor(), phi in arb_vec(), m in 0.2..2.0f64) {
            let t = stress_real(&g, &phi, m);
            let es = eigensystem_numeric(&t).unwrap();
            let scale = 1.0 + t.norm();
            for (i, p) in es.pairs.iter().enumerate() {
                prop_assert!(p.residual(&t) <= 1e-9 * scale * p.vector.euclidean_norm());
                for q in &es.pairs[i + 1..] {
                    if (p.eigenvalue - q.eigenvalue).abs() > 1e-6 * scale {
                        prop_assert!(p.vector.dot(&q.vector).abs() <= 1e-9 * p.vector.euclidean_norm() * q.vector.euclidean_norm());
                    }
                }
            }
        }

        #[test]
        fn numeric_solve_is_boost_equivariant(g in arb_tensor(), phi in arb_vec(), l in arb_lorentz()) {
            let t = stress_real(&g, &phi, 1.0);
            let a = eigensystem_numeric(&t).unwrap();
            let b = eigensystem_numeric(&t.transform(&l)).unwrap();
            // A time-like eigenvector is only determined to ~ε|T||v|²/gap, the gap
            // counting complex eigenvalues too. Near-defective draws (a close real
            // pair that a boost can turn complex) are skipped.
            let conditioning = |s: &NumericEigensystem, p: &EigenPair| {
                let real = s.pairs.iter().map(|o| (o.eigenvalue - p.eigenvalue).abs());
                let complex = s.complex.iter().map(|z| (z - p.eigenvalue).norm());
                let gap = real.chain(complex).filter(|d| *d > 0.0).fold(f64::INFINITY, f64::min);
                f64::EPSILON * t.norm() * p.vector.euclidean_norm().powi(2) / gap
            };
            for (s, p) in [(&a, a.timelike_pair()), (&b, b.timelike_pair())] {
                if let Some(p) = p {
                    prop_assume!(conditioning(s, p) <= 1e-11);
                }
            }
            if let (Some(p), Some(q)) = (a.timelike_pair(), b.timelike_pair()) {
                let moved = crate::minkowski::mat_vec(&l, &p.vector);
                prop_assert!((moved - q.vector).euclidean_norm() <= 1e-9 * (1.0 + t.norm()) * moved.euclidean_norm());
                prop_assert!((p.eigenvalue - q.eigenvalue).abs() <= 1e-9 * (1.0 + t.norm()));
            } else {
                prop_assert_eq!(a.timelike_pair().is_some(), b.timelike_pair().is_some());
            }
        }

        #[test]
        fn maxwellian_spectrum_is_duality_invariant(g in arb_tensor(), th in -6.3..6.3f64) {
            let a = eigensystem_numeric(&maxwellian(&g)).unwrap();
            let b = eigensystem_numeric(&maxwellian(&g.duality_rotate(th))).unwrap();
            prop_assert_eq!(a.pairs.len(), b.pairs.len());
            for (p, q) in a.pairs.iter().zip(&b.pairs) {
                prop_assert!((p.eigenvalue - q.eigenvalue).abs() <= 1e-12 * (1.0 + g.norm().powi(2)));
            }
        }

        #[test]
        fn common_plane_contains_both_time_legs(l1 in arb_lorentz(), l2 in arb_lorentz()) {
            let (f1, f2) = (FrameTetrad::IDENTITY.transform(&l1), FrameTetrad::IDENTITY.transform(&l2));
            let p = common_plane(&f1, &f2).unwrap();
            prop_assert!(crate::minkowski::plane_defect(&p.t_hat, &p.z_hat) <= 1e-10);
            for (f, th) in [(f1, p.theta1), (f2, p.theta2)] {
                let ti = p.time_vector(th);
                // Tᵢ lies in Pᵢ; its partner Zᵢ in Pᵢ is orthogonal to Ω.
                let back = f.t * ti.dot(&f.t) - f.z * ti.dot(&f.z);
                prop_assert!((back - ti).euclidean_norm() <= 1e-9 * ti.euclidean_norm());
                let zi = f.z * ti.dot(&f.t) + f.t * (-ti.dot(&f.z));
                let zi = zi * (1.0 / (-zi.norm2()).sqrt());
                prop_assert!(zi.dot(&p.z_hat).abs() <= 1e-9 * zi.euclidean_norm());
                prop_assert!(zi.dot(&p.t_hat).abs() <= 1e-9 * zi.euclidean_norm());
            }
            let c = p.time_vector(p.theta1).dot(&p.time_vector(p.theta2));
            prop_assert!((c - (p.theta1 - p.theta2).cosh()).abs() <= 1e-9 * c);
        }

        #[test]
        fn massless_closed_form_matches_numeric(
            k1 in 0.0..2.0f64, k2 in 0.01..2.0f64, th1 in -1.5..1.5f64, th2 in -1.5..1.5f64, l in arb_lorentz()
        ) {
            let f = FrameTetrad::IDENTITY.transform(&l);
            let p = CommonPlane { t_hat: f.t, z_hat: f.z, theta1: th1, theta2: th2 };
            let e = eigensystem_complex_massless(k1, k2, &p).unwrap();
            let t = dyad(&p.time_vector(th1)) * (2.0 * k1) + dyad(&p.time_vector(th2)) * (2.0 * k2);
            let sc = 1.0 + t.norm();
            prop_assert!(e.timelike.residual(&t) <= 1e-9 * sc * e.timelike.vector.euclidean_norm());
            prop_assert!(e.spacelike.residual(&t) <= 1e-9 * sc * e.spacelike.vector.euclidean_norm());
            prop_assert_eq!(e.timelike.causal, Causal::Timelike);
            prop_assert!(e.timelike.eigenvalue >= 0.0 && e.spacelike.eigenvalue <= 1e-12 * sc);
            let n = eigensystem_numeric(&t).unwrap();
            let top = n.pairs.iter().map(|q| q.eigenvalue).fold(f64::MIN, f64::max);
            prop_assert!((top - e.timelike.eigenvalue).abs() <= 1e-9 * sc);
            let b = massless_block(k1, k2, th1, th2);
            let tr = b[0][0] + b[1][1];
            let det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
            prop_assert!((e.timelike.eigenvalue * e.spacelike.eigenvalue - det).abs() <= 1e-9 * sc * sc);
            prop_assert!((e.timelike.eigenvalue + e.spacelike.eigenvalue - tr).abs() <= 1e-9 * sc);
            let formula = (k1 - k2) / (k1 + k2) * (th1 - th2).tanh();
            prop_assert!((e.tanh_2theta_balanced - formula).abs() <= 1e-12);
        }
    }
}
