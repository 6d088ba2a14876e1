//! Plane-wave Proca fields and their analytic derivatives.
//!
//! A mode is `a ε^μ exp(−i s k·x)` with k on the mass shell and `s = ±1` the
//! frequency sign. Each derivative ∂_ν brings down `−i s k_ν`, so the field
//! tensor G_μν = ∂_μφ_ν − ∂_νφ_μ is evaluated in closed form.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_mass, Error, Result};
use crate::minkowski::{
    AntisymmetricTensor, CMat4, ComplexAntisymmetricTensor, ComplexFourVector, FourVector, METRIC,
};

/// Relative tolerance on k·ε for accepted modes.
pub const CONSTRAINT_TOLERANCE: f64 = 1e-10;

const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn mass_shell(k: [f64; 3], m: f64) -> Result<f64> {
    ensure_mass(m)?;
    Ok((k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + m * m).sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FrequencySign {
    /// exp(−i k·x)
    Positive,
    /// exp(+i k·x)
    Negative,
}

impl FrequencySign {
    pub fn value(self) -> f64 {
        match self {
            FrequencySign::Positive => 1.0,
            FrequencySign::Negative => -1.0,
        }
    }

    pub fn from_int(s: i32) -> Result<Self> {
        match s {
            1 => Ok(FrequencySign::Positive),
            -1 => Ok(FrequencySign::Negative),
            _ => Err(Error::Invalid(format!(
                "frequency sign must be ±1, got {s}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneWaveMode {
    k: [f64; 3],
    k0: f64,
    mass: f64,
    polarization: ComplexFourVector,
    amplitude: Complex64,
    sign: FrequencySign,
}

impl PlaneWaveMode {
    pub fn k_spatial(&self) -> [f64; 3] {
        self.k
    }

    pub fn k0(&self) -> f64 {
        self.k0
    }

    pub fn k(&self) -> FourVector {
        FourVector::new(self.k0, self.k[0], self.k[1], self.k[2])
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn polarization(&self) -> ComplexFourVector {
        self.polarization
    }

    pub fn amplitude(&self) -> Complex64 {
        self.amplitude
    }

    pub fn sign(&self) -> FrequencySign {
        self.sign
    }

    /// Builds a mode without the transversality check. Only useful for
    /// negative controls; everything else should go through [`make_mode`].
    pub fn unchecked(
        k: [f64; 3],
        m: f64,
        polarization: ComplexFourVector,
        amplitude: Complex64,
        sign: FrequencySign,
    ) -> Result<Self> {
        let k0 = mass_shell(k, m)?;
        Ok(PlaneWaveMode {
            k,
            k0,
            mass: m,
            polarization,
            amplitude,
            sign,
        })
    }

    fn phase(&self, x: &FourVector) -> Complex64 {
        let kx = self.k().dot(x);
        (-I * self.sign.value() * kx).exp()
    }

    /// a·phase and the derivative factor −i s.
    fn weight(&self, x: &FourVector) -> Complex64 {
        self.amplitude * self.phase(x)
    }
}

pub fn make_mode(
    k: [f64; 3],
    m: f64,
    polarization: ComplexFourVector,
    amplitude: Complex64,
    sign: FrequencySign,
) -> Result<PlaneWaveMode> {
    let mode = PlaneWaveMode::unchecked(k, m, polarization, amplitude, sign)?;
    if !polarization.is_finite() || !(amplitude.re.is_finite() && amplitude.im.is_finite()) {
        return Err(Error::Invalid(
            "non-finite polarization or amplitude".into(),
        ));
    }
    let residual = polarization.dot_real(&mode.k()).norm();
    let tolerance = CONSTRAINT_TOLERANCE * polarization.norm() * mode.k().euclidean_norm();
    if residual > tolerance {
        return Err(Error::Constraint {
            residual,
            tolerance,
        });
    }
    Ok(mode)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FieldConfig {
    mass: f64,
    modes: Vec<PlaneWaveMode>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldSample {
    pub event: FourVector,
    /// φ^μ (contravariant).
    pub phi: ComplexFourVector,
    /// G_μν (lower indices).
    pub g: ComplexAntisymmetricTensor,
    pub phi_r: FourVector,
    pub phi_i: FourVector,
    pub g_r: AntisymmetricTensor,
    pub g_i: AntisymmetricTensor,
}

impl FieldConfig {
    pub fn new(mass: f64, modes: Vec<PlaneWaveMode>) -> Result<Self> {
        ensure_mass(mass)?;
        if modes.is_empty() {
            return Err(Error::Invalid(
                "field configuration needs at least one mode".into(),
            ));
        }
        if let Some(bad) = modes.iter().find(|md| md.mass != mass) {
            return Err(Error::Invalid(format!(
                "mode mass {} differs from configuration mass {mass}",
                bad.mass
            )));
        }
        Ok(FieldConfig { mass, modes })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn modes(&self) -> &[PlaneWaveMode] {
        &self.modes
    }

    /// Superposition of two configurations with the same mass.
    pub fn superpose(&self, other: &FieldConfig) -> Result<FieldConfig> {
        let mut modes = self.modes.clone();
        modes.extend_from_slice(&other.modes);
        FieldConfig::new(self.mass, modes)
    }

    /// φ^μ(x) alone.
    pub fn phi(&self, x: &FourVector) -> ComplexFourVector {
        let mut acc = ComplexFourVector::ZERO;
        for md in &self.modes {
            acc = acc + md.polarization.scale(md.weight(x));
        }
        acc
    }

    pub fn evaluate(&self, x: &FourVector) -> FieldSample {
        let mut phi = ComplexFourVector::ZERO;
        let mut g: CMat4 = [[Complex64::new(0.0, 0.0); 4]; 4];
        for md in &self.modes {
            let w = md.weight(x);
            phi = phi + md.polarization.scale(w);
            let kl = md.k().lower();
            let el = md.polarization.lower();
            let d = -I * md.sign.value() * w;
            for mu in 0..4 {
                for nu in (mu + 1)..4 {
                    let v = d * (el[nu] * kl[mu] - el[mu] * kl[nu]);
                    g[mu][nu] += v;
                    g[nu][mu] -= v;
                }
            }
        }
        let g = ComplexAntisymmetricTensor::from_lower(&g);
        FieldSample {
            event: *x,
            phi,
            g,
            phi_r: phi.re(),
            phi_i: phi.im(),
            g_r: g.re(),
            g_i: g.im(),
        }
    }

    /// ∂_μφ^μ, analytically.
    pub fn divergence(&self, x: &FourVector) -> Complex64 {
        self.modes
            .iter()
            .map(|md| -I * md.sign.value() * md.polarization.dot_real(&md.k()) * md.weight(x))
            .sum()
    }

    /// (□ + m²)φ^μ from central second differences with step `h`.
    pub fn klein_gordon_residual(&self, x: &FourVector, h: f64) -> ComplexFourVector {
        let centre = self.phi(x);
        let mut acc = centre.scale(Complex64::new(self.mass * self.mass, 0.0));
        for (mu, g) in METRIC.iter().enumerate() {
            let step = FourVector::basis(mu) * h;
            let fwd = self.phi(&(*x + step));
            let bwd = self.phi(&(*x - step));
            let second = (fwd + bwd - centre.scale(Complex64::new(2.0, 0.0)))
                .scale(Complex64::new(g / (h * h), 0.0));
            acc = acc + second;
        }
        acc
    }

    /// G_μν from central first differences of φ with step `h`.
    pub fn field_tensor_fd(&self, x: &FourVector, h: f64) -> ComplexAntisymmetricTensor {
        let grads: [[Complex64; 4]; 4] = std::array::from_fn(|nu| {
            let step = FourVector::basis(nu) * h;
            let d = self.phi(&(*x + step)) - self.phi(&(*x - step));
            // ∂_ν φ_μ with φ lowered.
            std::array::from_fn(|mu| d.0[mu] * (METRIC[mu] / (2.0 * h)))
        });
        let g: CMat4 =
            std::array::from_fn(|mu| std::array::from_fn(|nu| grads[mu][nu] - grads[nu][mu]));
        ComplexAntisymmetricTensor::from_lower(&g)
    }
}

/// Counter-propagating standing waves along x¹ and x² with W³ = +m.
///
/// Four modes of amplitude −½ with polarizations (±k₁, k₀, −im, 0) along ±x¹
/// and (±k₂, im, k₀, 0) along ±x². Lowering the resulting φ^μ gives
///
/// φ_0 = −i(k₁ sin k₁x¹ + k₂ sin k₂x²) e^{−ik₀t}
/// φ_1 = (im cos k₂x² + k₀ cos k₁x¹) e^{−ik₀t}
/// φ_2 = (−im cos k₁x¹ + k₀ cos k₂x²) e^{−ik₀t},  φ_3 = 0.
pub fn standing_wave_spin_up(k1: f64, k2: f64, m: f64) -> Result<FieldConfig> {
    ensure_mass(m)?;
    if !(k1.is_finite() && k2.is_finite()) || (k1.abs() - k2.abs()).abs() > 1e-12 * (1.0 + k1.abs())
    {
        return Err(Error::UnequalWaveNumbers(k1, k2));
    }
    let k0 = mass_shell([k1, 0.0, 0.0], m)?;
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let amp = c(-0.5, 0.0);
    let mut modes = Vec::with_capacity(4);
    for s in [1.0, -1.0] {
        let eps_x = ComplexFourVector([c(s * k1, 0.0), c(k0, 0.0), c(0.0, -m), c(0.0, 0.0)]);
        modes.push(make_mode(
            [s * k1, 0.0, 0.0],
            m,
            eps_x,
            amp,
            FrequencySign::Positive,
        )?);
        let eps_y = ComplexFourVector([c(s * k2, 0.0), c(0.0, m), c(k0, 0.0), c(0.0, 0.0)]);
        modes.push(make_mode(
            [0.0, s * k2, 0.0],
            m,
            eps_y,
            amp,
            FrequencySign::Positive,
        )?);
    }
    FieldConfig::new(m, modes)
}

/// Two oblique modes with unrelated wave vectors and complex amplitudes. Its
/// stress tensor has no special symmetry, which makes it the reference input
/// for finite-difference convergence audits.
pub fn oblique_probe(m: f64) -> FieldConfig {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let k_a = [0.5, 0.0, 0.0];
    let k_b = [0.0, 0.3, 0.4];
    let eps_a = ComplexFourVector([c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.7)]);
    let eps_b = ComplexFourVector([c(0.0, 0.0), c(1.0, 0.5), c(0.0, 0.0), c(0.0, 0.0)]);
    let modes = vec![
        make_mode(k_a, m, eps_a, c(0.8, 0.3), FrequencySign::Positive)
            .expect("transverse by construction"),
        make_mode(k_b, m, eps_b, c(-0.4, 0.9), FrequencySign::Negative)
            .expect("transverse by construction"),
    ];
    FieldConfig::new(m, modes).expect("valid probe")
}

/// JSON form of a single mode.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeSpec {
    pub k: [f64; 3],
    pub eps_re: [f64; 4],
    pub eps_im: [f64; 4],
    pub amp_re: f64,
    pub amp_im: f64,
    pub sign: i32,
}

/// JSON form of a field configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldConfigSpec {
    pub mass: f64,
    pub modes: Vec<ModeSpec>,
}

impl FieldConfigSpec {
    pub fn build(&self) -> Result<FieldConfig> {
        let modes = self
            .modes
            .iter()
            .map(|s| {
                let eps =
                    ComplexFourVector::from_parts(&FourVector(s.eps_re), &FourVector(s.eps_im));
                make_mode(
                    s.k,
                    self.mass,
                    eps,
                    Complex64::new(s.amp_re, s.amp_im),
                    FrequencySign::from_int(s.sign)?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        FieldConfig::new(self.mass, modes)
    }
}

impl From<&FieldConfig> for FieldConfigSpec {
    fn from(cfg: &FieldConfig) -> Self {
        FieldConfigSpec {
            mass: cfg.mass,
            modes: cfg
                .modes
                .iter()
                .map(|md| ModeSpec {
                    k: md.k,
                    eps_re: md.polarization.re().0,
                    eps_im: md.polarization.im().0,
                    amp_re: md.amplitude.re,
                    amp_im: md.amplitude.im,
                    sign: md.sign.value() as i32,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// The standing wave written out component by component (covariant).
    fn closed_form(k1: f64, k2: f64, m: f64, x: &FourVector) -> [Complex64; 4] {
        let k0 = (k1 * k1 + m * m).sqrt();
        let (c1, s1) = ((k1 * x[1]).cos(), (k1 * x[1]).sin());
        let (c2, s2) = ((k2 * x[2]).cos(), (k2 * x[2]).sin());
        let ph = (-I * k0 * x[0]).exp();
        [
            -I * (k1 * s1 + k2 * s2) * ph,
            (I * m * c2 + k0 * c1) * ph,
            (-I * m * c1 + k0 * c2) * ph,
            c(0.0, 0.0),
        ]
    }

    #[test]
    fn mass_shell_examples() {
        assert_eq!(mass_shell([0.0; 3], 1.0).unwrap(), 1.0);
        assert!((mass_shell([0.2, 0.2, 0.0], 1.0).unwrap() - 1.08f64.sqrt()).abs() < 1e-15);
        assert!(matches!(
            mass_shell([3.0, 4.0, 0.0], 0.0),
            Err(Error::NonPositiveMass(_))
        ));
    }

    #[test]
    fn mode_validation() {
        let rest = ComplexFourVector([c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(make_mode([0.0; 3], 1.0, rest, c(1.0, 0.0), FrequencySign::Positive).is_ok());
        let k3 = 0.75;
        let k0 = (1.0f64 + k3 * k3).sqrt();
        let longit =
            ComplexFourVector([c(k0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(k0 * k0 / k3, 0.0)]);
        assert!(make_mode(
            [0.0, 0.0, k3],
            1.0,
            longit,
            c(1.0, 0.0),
            FrequencySign::Positive
        )
        .is_ok());
        let bad = ComplexFourVector([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(
            make_mode(
                [0.0, 0.0, k3],
                1.0,
                bad,
                c(1.0, 0.0),
                FrequencySign::Positive
            ),
            Err(Error::Constraint { .. })
        ));
    }

    #[test]
    fn rest_mode_at_origin() {
        let eps = ComplexFourVector([c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        for (sign, s) in [
            (FrequencySign::Positive, 1.0),
            (FrequencySign::Negative, -1.0),
        ] {
            let m = 1.3;
            let cfg = FieldConfig::new(
                m,
                vec![make_mode([0.0; 3], m, eps, c(1.0, 0.0), sign).unwrap()],
            )
            .unwrap();
            let smp = cfg.evaluate(&FourVector::ZERO);
            assert_eq!(smp.phi, eps);
            assert!((smp.g.e[0] - I * m * s).norm() < 1e-15);
        }
    }

    #[test]
    fn standing_wave_origin() {
        let cfg = standing_wave_spin_up(0.2, 0.2, 1.0).unwrap();
        let k0 = 1.04f64.sqrt();
        let phi = cfg.evaluate(&FourVector::ZERO).phi.lower();
        let want = [c(0.0, 0.0), c(k0, 1.0), c(k0, -1.0), c(0.0, 0.0)];
        for i in 0..4 {
            assert!((phi[i] - want[i]).norm() < 1e-15, "{i}: {:?}", phi[i]);
        }
        assert!(cfg.modes().iter().all(|md| (md.k0() - k0).abs() < 1e-15));
    }

    #[test]
    fn standing_wave_rejects_unequal() {
        assert!(matches!(
            standing_wave_spin_up(0.2, 0.3, 1.0),
            Err(Error::UnequalWaveNumbers(..))
        ));
        assert!(standing_wave_spin_up(0.2, -0.2, 1.0).is_ok());
    }

    #[test]
    fn off_constraint_mode_has_divergence() {
        let bad = ComplexFourVector([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let md = PlaneWaveMode::unchecked(
            [0.0, 0.0, 0.5],
            1.0,
            bad,
            c(1.0, 0.0),
            FrequencySign::Positive,
        )
        .unwrap();
        let cfg = FieldConfig::new(1.0, vec![md]).unwrap();
        assert!(cfg.divergence(&FourVector::new(0.3, 0.1, 0.2, 0.4)).norm() > 0.5);
    }

    #[test]
    fn json_round_trip() {
        let cfg = standing_wave_spin_up(0.2, 0.2, 1.0).unwrap();
        let spec = FieldConfigSpec::from(&cfg);
        let text = serde_json::to_string(&spec).unwrap();
        let back: FieldConfigSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back.build().unwrap(), cfg);
    }

    #[test]
    fn mixed_masses_rejected() {
        let eps = ComplexFourVector([c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let a = make_mode([0.0; 3], 1.0, eps, c(1.0, 0.0), FrequencySign::Positive).unwrap();
        let b = make_mode([0.0; 3], 2.0, eps, c(1.0, 0.0), FrequencySign::Positive).unwrap();
        assert!(FieldConfig::new(1.0, vec![a, b]).is_err());
    }

    fn arb_event() -> impl Strategy<Value = FourVector> {
        prop::array::uniform4(-20.0..20.0f64).prop_map(FourVector)
    }

    proptest! {
        #[test]
        fn standing_wave_matches_closed_form(x in arb_event()) {
            let cfg = standing_wave_spin_up(0.2, 0.2, 1.0).unwrap();
            let phi = cfg.evaluate(&x).phi.lower();
            let want = closed_form(0.2, 0.2, 1.0, &x);
            for i in 0..4 {
                prop_assert!((phi[i] - want[i]).norm() < 1e-13);
            }
            prop_assert!(cfg.divergence(&x).norm() < 1e-13);
        }

        #[test]
        fn field_tensor_matches_finite_differences(x in arb_event()) {
            let cfg = standing_wave_spin_up(0.4, -0.4, 0.8).unwrap();
            let exact = cfg.evaluate(&x).g.lower();
            let err = |h: f64| {
                let fd = cfg.field_tensor_fd(&x, h).lower();
                (0..16).map(|n| (fd[n / 4][n % 4] - exact[n / 4][n % 4]).norm()).fold(0.0, f64::max)
            };
            let (e1, e2) = (err(2e-2), err(1e-2));
            prop_assert!(e1 < 1e-3);
            prop_assert!((3.5..=4.5).contains(&(e1 / e2)), "ratio {}", e1 / e2);
        }

        #[test]
        fn oblique_field_tensor_matches_finite_differences(x in arb_event()) {
            // Both wave vectors have components off the x¹x² plane, so every
            // E and B slot is populated.
            let cfg = oblique_probe(1.0);
            let exact = cfg.evaluate(&x).g.lower();
            let fd = cfg.field_tensor_fd(&x, 1e-3).lower();
            for mu in 0..4 {
                for nu in 0..4 {
                    prop_assert_eq!(exact[mu][nu], -exact[nu][mu]);
                    prop_assert!((fd[mu][nu] - exact[mu][nu]).norm() < 1e-6);
                }
            }
        }

        #[test]
        fn evaluation_is_linear(x in arb_event(), a in -2.0..2.0f64) {
            let a_cfg = standing_wave_spin_up(0.3, 0.3, 1.0).unwrap();
            let eps = ComplexFourVector([c(0.0, 0.0), c(0.0, a), c(1.0, 0.0), c(0.0, 0.0)]);
            let b_cfg = FieldConfig::new(1.0, vec![make_mode([0.0; 3], 1.0, eps, c(0.5, -0.2), FrequencySign::Negative).unwrap()]).unwrap();
            let sum = a_cfg.superpose(&b_cfg).unwrap().evaluate(&x);
            let (sa, sb) = (a_cfg.evaluate(&x), b_cfg.evaluate(&x));
            let lhs = sum.g.lower();
            let (la, lb) = (sa.g.lower(), sb.g.lower());
            for i in 0..4 {
                prop_assert!((sum.phi.0[i] - sa.phi.0[i] - sb.phi.0[i]).norm() < 1e-12);
                for j in 0..4 {
                    prop_assert!((lhs[i][j] - la[i][j] - lb[i][j]).norm() < 1e-12);
                }
            }
        }
    }
}
