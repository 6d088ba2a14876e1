//! The spin-up standing wave in the x¹x² plane: closed-form rest-energy
//! velocity, eigenvalue landscape and flow lines.
//!
//! With c₁ = cos k₁x¹, c₂ = cos k₂x², s₁, s₂ likewise, C = c₁² + c₂²:
//!
//! A = m²c₁, B = −m²c₂, α = m(k₁s₁ + k₂s₂), λ² = A² + B² − α² = m⁴C − α².
//!
//! For λ² > 0 the flow velocity is u = (m²√C, αc₂/√C, −αc₁/√C, 0)/λ; for λ² < 0
//! it is (α, m²c₂, −m²c₁, 0)/|λ|, flipped to be future-pointing. Eigenvalues
//! here are on the ½T scale (see the crate docs).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_mass, Error, Result};
use crate::field::{standing_wave_spin_up, FieldConfig};
use crate::minkowski::FourVector;
use crate::stress::stress_total;
use crate::tetrad::{eigensystem_numeric, NumericEigensystem};

/// |λ²| at or below this is the crossover locus, where no velocity is defined.
pub const CROSSOVER_BAND: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExampleParams {
    pub k1: f64,
    pub k2: f64,
    pub m: f64,
}

impl Default for ExampleParams {
    fn default() -> Self {
        ExampleParams {
            k1: 0.2,
            k2: 0.2,
            m: 1.0,
        }
    }
}

impl ExampleParams {
    pub fn new(k1: f64, k2: f64, m: f64) -> Result<Self> {
        let p = ExampleParams { k1, k2, m };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        ensure_mass(self.m)?;
        if !(self.k1.is_finite() && self.k2.is_finite())
            || (self.k1.abs() - self.k2.abs()).abs() > 1e-12 * (1.0 + self.k1.abs())
        {
            return Err(Error::UnequalWaveNumbers(self.k1, self.k2));
        }
        Ok(())
    }

    /// √(k₁² + m²), shared by every constituent mode.
    pub fn k0(&self) -> f64 {
        (self.k1 * self.k1 + self.m * self.m).sqrt()
    }

    pub fn field(&self) -> Result<FieldConfig> {
        standing_wave_spin_up(self.k1, self.k2, self.m)
    }

    /// One spatial period along x¹ (and x², since |k₁| = |k₂|).
    pub fn period(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.k1.abs()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    RealLambda,
    ImaginaryLambda,
    Crossover,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::RealLambda => "real_lambda",
            Branch::ImaginaryLambda => "imaginary_lambda",
            Branch::Crossover => "crossover",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchPoint {
    pub x1: f64,
    pub x2: f64,
    pub a: f64,
    pub b: f64,
    pub alpha: f64,
    pub lambda2: f64,
    pub branch: Branch,
}

impl BranchPoint {
    /// c₁² + c₂², recovered as (A² + B²)/m⁴.
    fn c_sum(&self, m: f64) -> f64 {
        (self.a * self.a + self.b * self.b) / m.powi(4)
    }
}

pub fn branch_quantities(p: &ExampleParams, x1: f64, x2: f64) -> BranchPoint {
    let m2 = p.m * p.m;
    let (s1, c1) = (p.k1 * x1).sin_cos();
    let (s2, c2) = (p.k2 * x2).sin_cos();
    let a = m2 * c1;
    let b = -m2 * c2;
    let alpha = p.m * (p.k1 * s1 + p.k2 * s2);
    let lambda2 = a * a + b * b - alpha * alpha;
    let branch = if lambda2.abs() <= CROSSOVER_BAND {
        Branch::Crossover
    } else if lambda2 > 0.0 {
        Branch::RealLambda
    } else {
        Branch::ImaginaryLambda
    };
    BranchPoint {
        x1,
        x2,
        a,
        b,
        alpha,
        lambda2,
        branch,
    }
}

/// Unit future-pointing flow velocity together with its branch.
pub fn velocity_and_branch(p: &ExampleParams, x1: f64, x2: f64) -> Result<(FourVector, Branch)> {
    let bp = branch_quantities(p, x1, x2);
    let m2 = p.m * p.m;
    let (c1, c2) = (bp.a / m2, -bp.b / m2);
    match bp.branch {
        Branch::Crossover => Err(Error::Crossover(bp.lambda2)),
        Branch::RealLambda => {
            let lam = bp.lambda2.sqrt();
            let rc = bp.c_sum(p.m).sqrt();
            Ok((
                FourVector::new(
                    m2 * rc / lam,
                    bp.alpha * c2 / (rc * lam),
                    -bp.alpha * c1 / (rc * lam),
                    0.0,
                ),
                Branch::RealLambda,
            ))
        }
        Branch::ImaginaryLambda => {
            let lam = (-bp.lambda2).sqrt();
            let u = FourVector::new(bp.alpha / lam, m2 * c2 / lam, -m2 * c1 / lam, 0.0);
            Ok((if bp.alpha < 0.0 { -u } else { u }, Branch::ImaginaryLambda))
        }
    }
}

pub fn analytic_velocity(p: &ExampleParams, x1: f64, x2: f64) -> Result<FourVector> {
    velocity_and_branch(p, x1, x2).map(|(u, _)| u)
}

/// k_R = m²k₀²C, the real field's contribution.
pub fn real_part_eigenvalue(p: &ExampleParams, x1: f64, x2: f64) -> f64 {
    let bp = branch_quantities(p, x1, x2);
    p.m * p.m * p.k0().powi(2) * bp.c_sum(p.m)
}

/// k_R + k_I = m²k₀²C + m⁴C − m²(k₁s₁ + k₂s₂)², i.e. k_R + λ², on both branches.
pub fn analytic_eigenvalue(p: &ExampleParams, x1: f64, x2: f64) -> f64 {
    real_part_eigenvalue(p, x1, x2) + branch_quantities(p, x1, x2).lambda2
}

/// The eigenvalue of ½T on the time-like eigenvector: k_R + |λ²|. It agrees
/// with [`analytic_eigenvalue`] on the real branch only.
pub fn timelike_eigenvalue(p: &ExampleParams, x1: f64, x2: f64) -> f64 {
    real_part_eigenvalue(p, x1, x2) + branch_quantities(p, x1, x2).lambda2.abs()
}

/// tanhθ = α/(m²√C), the rapidity taking T̂_R = e₀ to the real-branch velocity.
pub fn tanh_theta(p: &ExampleParams, x1: f64, x2: f64) -> f64 {
    let bp = branch_quantities(p, x1, x2);
    bp.alpha / (p.m * p.m * bp.c_sum(p.m).sqrt())
}

/// Eigen-solve of the assembled stress tensor at (t, x¹, x², 0).
pub fn numeric_eigensystem(
    field: &FieldConfig,
    t: f64,
    x1: f64,
    x2: f64,
) -> Result<NumericEigensystem> {
    let smp = field.evaluate(&FourVector::new(t, x1, x2, 0.0));
    eigensystem_numeric(&stress_total(&smp, field.mass()).total)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub n: usize,
    /// Periodic axes omit the upper endpoint: xᵢ = min + i(max − min)/n.
    #[serde(default)]
    pub periodic: bool,
}

impl Axis {
    pub fn validate(&self) -> Result<()> {
        if !(self.min.is_finite() && self.max.is_finite()) || !(self.max > self.min) {
            return Err(Error::Invalid(format!(
                "axis bounds [{}, {}] are not an increasing finite pair",
                self.min, self.max
            )));
        }
        if self.n < 2 {
            return Err(Error::Invalid(format!(
                "axis resolution must be at least 2, got {}",
                self.n
            )));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        let span = self.max - self.min;
        let div = if self.periodic { self.n } else { self.n - 1 } as f64;
        (0..self.n)
            .map(|i| self.min + span * i as f64 / div)
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub x1: Axis,
    pub x2: Axis,
}

impl GridSpec {
    /// n × n periodic grid over one spatial period, [0, 2π/|k₁|)².
    pub fn one_period(p: &ExampleParams, n: usize) -> GridSpec {
        let axis = Axis {
            min: 0.0,
            max: p.period(),
            n,
            periodic: true,
        };
        GridSpec { x1: axis, x2: axis }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenvalueMap {
    pub x1: Vec<f64>,
    pub x2: Vec<f64>,
    /// values[i][j] at (x1[i], x2[j]).
    pub values: Vec<Vec<f64>>,
}

impl EigenvalueMap {
    /// (x¹, x², value) of the smallest entry.
    pub fn argmin(&self) -> (f64, f64, f64) {
        self.extreme(|a, b| a < b)
    }

    pub fn argmax(&self) -> (f64, f64, f64) {
        self.extreme(|a, b| a > b)
    }

    fn extreme(&self, better: impl Fn(f64, f64) -> bool) -> (f64, f64, f64) {
        let mut best = (self.x1[0], self.x2[0], self.values[0][0]);
        for (i, row) in self.values.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if better(v, best.2) {
                    best = (self.x1[i], self.x2[j], v);
                }
            }
        }
        best
    }
}

pub fn eigenvalue_map(p: &ExampleParams, grid: &GridSpec) -> Result<EigenvalueMap> {
    p.validate()?;
    grid.x1.validate()?;
    grid.x2.validate()?;
    let (x1, x2) = (grid.x1.points(), grid.x2.points());
    let values = x1
        .par_iter()
        .map(|&a| x2.iter().map(|&b| analytic_eigenvalue(p, a, b)).collect())
        .collect();
    Ok(EigenvalueMap { x1, x2, values })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Halt {
    /// An RK4 stage fell inside the crossover band.
    Crossover { step: usize },
    /// An RK4 stage landed on the other λ branch.
    BranchChange { step: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlowLine {
    pub seed: FourVector,
    pub step: f64,
    pub events: Vec<FourVector>,
    pub velocities: Vec<FourVector>,
    pub branches: Vec<Branch>,
    /// Set when integration stopped before the requested number of steps.
    pub halted: Option<Halt>,
}

impl FlowLine {
    /// Largest gap between each stored event and an RK4 step replayed from its
    /// predecessor.
    pub fn replay_defect(&self, p: &ExampleParams) -> f64 {
        self.events
            .windows(2)
            .map(|w| match rk4_step(p, &w[0], self.step, self.branches[0]) {
                Ok(next) => (next - w[1]).euclidean_norm(),
                Err(_) => f64::INFINITY,
            })
            .fold(0.0, f64::max)
    }
}

enum StepFailure {
    Crossover,
    BranchChange,
}

fn rk4_step(
    p: &ExampleParams,
    x: &FourVector,
    h: f64,
    branch: Branch,
) -> std::result::Result<FourVector, StepFailure> {
    let f = |y: &FourVector| match velocity_and_branch(p, y[1], y[2]) {
        Ok((u, b)) if b == branch => Ok(u),
        Ok(_) => Err(StepFailure::BranchChange),
        Err(_) => Err(StepFailure::Crossover),
    };
    let k1 = f(x)?;
    let k2 = f(&(*x + k1 * (0.5 * h)))?;
    let k3 = f(&(*x + k2 * (0.5 * h)))?;
    let k4 = f(&(*x + k3 * h))?;
    Ok(*x + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0))
}

/// Fixed-step RK4 along dx^μ/dτ = u^μ(x¹, x²) from (t₀, x¹, x², 0).
///
/// A negative `dtau` integrates backwards in proper time. The line stops when
/// a stage would leave the seed's branch or enter the crossover band.
pub fn integrate_flowline(
    p: &ExampleParams,
    seed: [f64; 3],
    dtau: f64,
    steps: usize,
) -> Result<FlowLine> {
    p.validate()?;
    if !(dtau.is_finite() && dtau != 0.0) {
        return Err(Error::Invalid(format!(
            "dtau must be finite and non-zero, got {dtau}"
        )));
    }
    if steps == 0 {
        return Err(Error::Invalid("steps must be at least 1".into()));
    }
    if !seed.iter().all(|s| s.is_finite()) {
        return Err(Error::Invalid("non-finite seed".into()));
    }
    let start = FourVector::new(seed[0], seed[1], seed[2], 0.0);
    let (u0, branch) = velocity_and_branch(p, start[1], start[2])?;
    let mut line = FlowLine {
        seed: start,
        step: dtau,
        events: vec![start],
        velocities: vec![u0],
        branches: vec![branch],
        halted: None,
    };
    let mut x = start;
    for n in 0..steps {
        match rk4_step(p, &x, dtau, branch) {
            Ok(next) => {
                let (u, b) = match velocity_and_branch(p, next[1], next[2]) {
                    Ok(ub) if ub.1 == branch => ub,
                    Ok(_) => {
                        line.halted = Some(Halt::BranchChange { step: n });
                        break;
                    }
                    Err(_) => {
                        line.halted = Some(Halt::Crossover { step: n });
                        break;
                    }
                };
                x = next;
                line.events.push(x);
                line.velocities.push(u);
                line.branches.push(b);
            }
            Err(StepFailure::Crossover) => {
                line.halted = Some(Halt::Crossover { step: n });
                break;
            }
            Err(StepFailure::BranchChange) => {
                line.halted = Some(Halt::BranchChange { step: n });
                break;
            }
        }
    }
    Ok(line)
}
