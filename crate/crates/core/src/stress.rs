//! Symmetric stress-energy tensor of the complex Proca field.
//!
//! For one real field (G, φ):
//!
//! T_μν = 2 G_μα G^α_ν + 2m² φ_μ φ_ν + g_μν (½ G_αβ G^αβ − m² φ_α φ^α),
//!
//! with G_μα G^α_ν = G_μα g^αβ G_βν. The complex field φ = φ(1) + iφ(2) gives
//!
//! T_μν = Ḡ_μα G^α_ν + G_μα Ḡ^α_ν + m²(φ̄_μ φ_ν + φ_μ φ̄_ν) + g_μν(½ Ḡ_αβ G^αβ − m² φ̄_α φ^α),
//!
//! which equals T(1) + T(2) identically. T_00 = (E² + B²) + m²(φ_0² + |φ⃗|²) per
//! real field, so ½T carries the maxwellian eigenvalues ±k.

use num_complex::Complex64;

use crate::field::{FieldConfig, FieldSample};
use crate::minkowski::{
    AntisymmetricTensor, CMat4, ComplexFourVector, FourVector, SymmetricTensor, METRIC,
};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StressEnergyParts {
    pub real: SymmetricTensor,
    pub imag: SymmetricTensor,
    pub total: SymmetricTensor,
    pub maxwellian_real: SymmetricTensor,
    pub maxwellian_imag: SymmetricTensor,
    /// Coefficients of g_μν: ½ G·G − m² φ·φ for the real and imaginary parts.
    pub trace_terms: [f64; 2],
    /// The same total assembled directly from the complex field.
    pub complex_form: SymmetricTensor,
}

/// g_μν-coefficient of a real field.
pub fn trace_term(g: &AntisymmetricTensor, phi: &FourVector, m: f64) -> f64 {
    0.5 * g.contract(g) - m * m * phi.norm2()
}

/// 2 G_μα G^α_ν + ½ g_μν G·G (the mass-independent part).
pub fn maxwellian(g: &AntisymmetricTensor) -> SymmetricTensor {
    let l = g.lower();
    let gg = 0.5 * g.contract(g);
    SymmetricTensor::from_fn(|mu, nu| {
        let quad: f64 = (0..4).map(|a| l[mu][a] * METRIC[a] * l[a][nu]).sum();
        2.0 * quad + if mu == nu { METRIC[mu] * gg } else { 0.0 }
    })
}

pub fn stress_real(g: &AntisymmetricTensor, phi: &FourVector, m: f64) -> SymmetricTensor {
    let l = g.lower();
    let p = phi.lower();
    let tr = trace_term(g, phi, m);
    let m2 = m * m;
    SymmetricTensor::from_fn(|mu, nu| {
        let quad: f64 = (0..4).map(|a| l[mu][a] * METRIC[a] * l[a][nu]).sum();
        2.0 * quad + 2.0 * m2 * p[mu] * p[nu] + if mu == nu { METRIC[mu] * tr } else { 0.0 }
    })
}

/// Total tensor straight from the complex quantities.
pub fn stress_complex(g: &CMat4, phi: &ComplexFourVector, m: f64) -> SymmetricTensor {
    let p = phi.lower();
    let m2 = m * m;
    let mut gg = Complex64::new(0.0, 0.0);
    for a in 0..4 {
        for b in 0..4 {
            gg += g[a][b].conj() * g[a][b] * (METRIC[a] * METRIC[b]);
        }
    }
    let pp = phi.hermitian_dot(phi);
    let tr = 0.5 * gg - m2 * pp;
    SymmetricTensor::from_fn(|mu, nu| {
        let mut s = Complex64::new(0.0, 0.0);
        for a in 0..4 {
            s += (g[mu][a].conj() * g[a][nu] + g[mu][a] * g[a][nu].conj()) * METRIC[a];
        }
        s += (p[mu].conj() * p[nu] + p[mu] * p[nu].conj()) * m2;
        if mu == nu {
            s += tr * METRIC[mu];
        }
        s.re
    })
}

pub fn stress_total(sample: &FieldSample, m: f64) -> StressEnergyParts {
    let real = stress_real(&sample.g_r, &sample.phi_r, m);
    let imag = stress_real(&sample.g_i, &sample.phi_i, m);
    StressEnergyParts {
        real,
        imag,
        total: real + imag,
        maxwellian_real: maxwellian(&sample.g_r),
        maxwellian_imag: maxwellian(&sample.g_i),
        trace_terms: [
            trace_term(&sample.g_r, &sample.phi_r, m),
            trace_term(&sample.g_i, &sample.phi_i, m),
        ],
        complex_form: stress_complex(&sample.g.lower(), &sample.phi, m),
    }
}

/// ∂^μ T_μν by central differences of step `h` in each coordinate.
pub fn conservation_residual(config: &FieldConfig, x: &FourVector, h: f64) -> FourVector {
    let m = config.mass();
    let total = |y: FourVector| stress_total(&config.evaluate(&y), m).total;
    let mut out = FourVector::ZERO;
    for mu in 0..4 {
        let step = FourVector::basis(mu) * h;
        let (f, b) = (total(*x + step), total(*x - step));
        for nu in 0..4 {
            out[nu] += METRIC[mu] * (f.0[mu][nu] - b.0[mu][nu]) / (2.0 * h);
        }
    }
    out
}
