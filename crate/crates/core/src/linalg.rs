//! Dense real 4×4 eigenproblems.
//!
//! Eigenvalues come from the classical pipeline (radix-2 balancing, reduction
//! to upper Hessenberg form by stabilized elimination, Francis double-shift QR).
//! Eigenvectors of real eigenvalues are recovered afterwards as null spaces of
//! `A − λI` by complete-pivoting elimination on the unbalanced matrix. Nearly
//! equal eigenvalues are clustered first, so a repeated eigenvalue hands back a
//! basis of its eigenspace instead of two arbitrary, nearly parallel vectors.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::minkowski::{CMat4, Mat4};

const EPS: f64 = f64::EPSILON;
const MAX_SWEEPS: usize = 60;

/// Relative gap below which eigenvalues are treated as one repeated value.
pub const CLUSTER_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct RealEigenspace {
    pub value: f64,
    /// How many computed eigenvalues were merged into this one.
    pub algebraic: usize,
    /// Euclidean-orthonormal basis of the numerical null space of A − λI.
    pub vectors: Vec<[f64; 4]>,
}

impl RealEigenspace {
    pub fn is_simple(&self) -> bool {
        self.algebraic == 1 && self.vectors.len() == 1
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Eigen4 {
    /// All four eigenvalues, sorted by descending real part, then imaginary part.
    pub values: [Complex64; 4],
    pub real: Vec<RealEigenspace>,
    /// Eigenvalues with a non-negligible imaginary part (conjugate pairs).
    pub complex: Vec<Complex64>,
}

pub fn max_abs(a: &Mat4) -> f64 {
    a.iter().flatten().fold(0.0, |m, x| m.max(x.abs()))
}

/// In-place radix-2 balancing (similarity by a diagonal scaling).
fn balance(a: &mut Mat4) {
    const RADIX: f64 = 2.0;
    let sqrdx = RADIX * RADIX;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..4 {
            let (mut r, mut c) = (0.0, 0.0);
            for j in 0..4 {
                if j != i {
                    c += a[j][i].abs();
                    r += a[i][j].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            while c < g {
                f *= RADIX;
                c *= sqrdx;
            }
            g = r * RADIX;
            while c > g {
                f /= RADIX;
                c /= sqrdx;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                let g = 1.0 / f;
                for j in 0..4 {
                    a[i][j] *= g;
                }
                for row in a.iter_mut() {
                    row[i] *= f;
                }
            }
        }
    }
}

/// Reduction to upper Hessenberg form by Gaussian elimination with pivoting.
fn hessenberg(a: &mut Mat4) {
    for m in 1..3 {
        let mut x: f64 = 0.0;
        let mut piv = m;
        for j in m..4 {
            if a[j][m - 1].abs() > x.abs() {
                x = a[j][m - 1];
                piv = j;
            }
        }
        if piv != m {
            a.swap(piv, m);
            for row in a.iter_mut() {
                row.swap(piv, m);
            }
        }
        if x != 0.0 {
            for i in (m + 1)..4 {
                let mut y = a[i][m - 1];
                if y != 0.0 {
                    y /= x;
                    a[i][m - 1] = 0.0;
                    for j in m..4 {
                        a[i][j] -= y * a[m][j];
                    }
                    for row in a.iter_mut() {
                        row[m] += y * row[i];
                    }
                }
            }
        }
    }
    for i in 2..4 {
        for j in 0..(i - 1) {
            a[i][j] = 0.0;
        }
    }
}

fn sign(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix (eigenvalues only).
fn hqr(a: &mut Mat4) -> Result<[Complex64; 4]> {
    let mut out = [Complex64::new(0.0, 0.0); 4];
    let mut anorm = 0.0;
    for i in 0..4usize {
        for j in i.saturating_sub(1)..4 {
            anorm += a[i][j].abs();
        }
    }
    let mut nn: isize = 3;
    let mut t = 0.0;
    macro_rules! h {
        ($i:expr, $j:expr) => {
            a[($i) as usize][($j) as usize]
        };
    }
    while nn >= 0 {
        let mut its = 0;
        loop {
            let mut l = nn;
            while l >= 1 {
                let mut s = h!(l - 1, l - 1).abs() + h!(l, l).abs();
                if s == 0.0 {
                    s = anorm;
                }
                if h!(l, l - 1).abs() <= EPS * s {
                    h!(l, l - 1) = 0.0;
                    break;
                }
                l -= 1;
            }
            let mut x = h!(nn, nn);
            if l == nn {
                out[nn as usize] = Complex64::new(x + t, 0.0);
                nn -= 1;
                break;
            }
            let mut y = h!(nn - 1, nn - 1);
            let mut w = h!(nn, nn - 1) * h!(nn - 1, nn);
            if l == nn - 1 {
                let p = 0.5 * (y - x);
                let q = p * p + w;
                let mut z = q.abs().sqrt();
                x += t;
                if q >= 0.0 {
                    z = p + sign(z, p);
                    let hi = x + z;
                    let lo = if z != 0.0 { x - w / z } else { hi };
                    out[(nn - 1) as usize] = Complex64::new(hi, 0.0);
                    out[nn as usize] = Complex64::new(lo, 0.0);
                } else {
                    out[(nn - 1) as usize] = Complex64::new(x + p, z);
                    out[nn as usize] = Complex64::new(x + p, -z);
                }
                nn -= 2;
                break;
            }
            if its == MAX_SWEEPS {
                return Err(Error::NoConvergence);
            }
            if its == 10 || its == 20 || its == 40 {
                t += x;
                for i in 0..=nn {
                    h!(i, i) -= x;
                }
                let s = h!(nn, nn - 1).abs() + h!(nn - 1, nn - 2).abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            its += 1;
            let (mut p, mut q, mut r);
            let mut m = nn - 2;
            loop {
                let z = h!(m, m);
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / h!(m + 1, m) + h!(m, m + 1);
                q = h!(m + 1, m + 1) - z - rr - ss;
                r = h!(m + 2, m + 1);
                let s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                let u = h!(m, m - 1).abs() * (q.abs() + r.abs());
                let v = p.abs() * (h!(m - 1, m - 1).abs() + z.abs() + h!(m + 1, m + 1).abs());
                if u <= EPS * v {
                    break;
                }
                m -= 1;
            }
            for i in (m + 2)..=nn {
                h!(i, i - 2) = 0.0;
                if i != m + 2 {
                    h!(i, i - 3) = 0.0;
                }
            }
            let mut k = m;
            while k < nn {
                if k != m {
                    p = h!(k, k - 1);
                    q = h!(k + 1, k - 1);
                    r = if k != nn - 1 { h!(k + 2, k - 1) } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x != 0.0 {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                let s = sign((p * p + q * q + r * r).sqrt(), p);
                if s != 0.0 {
                    if k == m {
                        if l != m {
                            h!(k, k - 1) = -h!(k, k - 1);
                        }
                    } else {
                        h!(k, k - 1) = -s * x;
                    }
                    p += s;
                    x = p / s;
                    y = q / s;
                    let z = r / s;
                    q /= p;
                    r /= p;
                    for j in k..=nn {
                        let mut pp = h!(k, j) + q * h!(k + 1, j);
                        if k != nn - 1 {
                            pp += r * h!(k + 2, j);
                            h!(k + 2, j) -= pp * z;
                        }
                        h!(k + 1, j) -= pp * y;
                        h!(k, j) -= pp * x;
                    }
                    let mmin = if nn < k + 3 { nn } else { k + 3 };
                    for i in l..=mmin {
                        let mut pp = x * h!(i, k) + y * h!(i, k + 1);
                        if k != nn - 1 {
                            pp += z * h!(i, k + 2);
                            h!(i, k + 2) -= pp * r;
                        }
                        h!(i, k + 1) -= pp * q;
                        h!(i, k) -= pp;
                    }
                }
                k += 1;
            }
        }
    }
    Ok(out)
}

pub fn eigenvalues(a: &Mat4) -> Result<[Complex64; 4]> {
    if !a.iter().flatten().all(|x| x.is_finite()) {
        return Err(Error::Invalid("matrix has non-finite entries".into()));
    }
    let mut h = *a;
    balance(&mut h);
    hessenberg(&mut h);
    let mut vals = hqr(&mut h)?;
    vals.sort_by(|x, y| y.re.total_cmp(&x.re).then(y.im.total_cmp(&x.im)));
    Ok(vals)
}

/// Complete-pivoting elimination of a square matrix. Returns the reduced rows,
/// the column permutation and the absolute pivots in elimination order.
fn eliminate<const N: usize>(b: &[[f64; N]; N]) -> ([[f64; N]; N], [usize; N], [f64; N]) {
    let mut u = *b;
    let mut cols: [usize; N] = std::array::from_fn(|i| i);
    let mut pivots = [0.0; N];
    for k in 0..N {
        let (mut pi, mut pj, mut best) = (k, k, -1.0);
        for i in k..N {
            for j in k..N {
                if u[i][j].abs() > best {
                    best = u[i][j].abs();
                    pi = i;
                    pj = j;
                }
            }
        }
        u.swap(k, pi);
        for row in u.iter_mut() {
            row.swap(k, pj);
        }
        cols.swap(k, pj);
        pivots[k] = best;
        if best == 0.0 {
            continue;
        }
        for i in (k + 1)..N {
            let f = u[i][k] / u[k][k];
            u[i][k] = 0.0;
            for j in (k + 1)..N {
                u[i][j] -= f * u[k][j];
            }
        }
    }
    (u, cols, pivots)
}

/// Basis of the numerical null space of `b` with exactly `dim` vectors
/// (`dim` ≥ 1): the trailing `dim` pivots of complete-pivoting elimination are
/// treated as zero and the leading rows are back-substituted.
pub fn null_space<const N: usize>(b: &[[f64; N]; N], dim: usize) -> Vec<[f64; N]> {
    let dim = dim.clamp(1, N);
    let rank = N - dim;
    let (u, cols, _) = eliminate(b);
    let mut basis: Vec<[f64; N]> = Vec::with_capacity(dim);
    for free in rank..N {
        let mut y = [0.0; N];
        y[free] = 1.0;
        for i in (0..rank).rev() {
            let mut s = 0.0;
            for j in (i + 1)..N {
                s += u[i][j] * y[j];
            }
            y[i] = -s / u[i][i];
        }
        let mut x = [0.0; N];
        for (k, &c) in cols.iter().enumerate() {
            x[c] = y[k];
        }
        // Euclidean Gram-Schmidt against the vectors already found.
        for q in &basis {
            let d: f64 = (0..N).map(|i| q[i] * x[i]).sum();
            for i in 0..N {
                x[i] -= d * q[i];
            }
        }
        let n = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if n > 0.0 {
            basis.push(x.map(|v| v / n));
        }
    }
    basis
}

/// Rank deficiency of `b` judged by complete-pivoting: pivots at or below
/// `tol` count as zero.
pub fn nullity<const N: usize>(b: &[[f64; N]; N], tol: f64) -> usize {
    let (_, _, pivots) = eliminate(b);
    pivots.iter().filter(|p| **p <= tol).count()
}

/// One step of inverse iteration `v ← (A − λI)⁻¹ v`, normalized. Sharpens a
/// null vector obtained from an eigenvalue that is accurate to rounding.
fn refine(a: &Mat4, lambda: f64, v: [f64; 4], scale: f64) -> [f64; 4] {
    let mut m = *a;
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= lambda;
    }
    let mut rhs = v;
    let mut perm = [0usize, 1, 2, 3];
    for k in 0..4 {
        let p = (k..4)
            .max_by(|&i, &j| m[i][k].abs().total_cmp(&m[j][k].abs()))
            .unwrap_or(k);
        m.swap(k, p);
        rhs.swap(k, p);
        perm.swap(k, p);
        if m[k][k].abs() < EPS * scale {
            m[k][k] = sign(EPS * scale, m[k][k]);
        }
        for i in (k + 1)..4 {
            let f = m[i][k] / m[k][k];
            for j in k..4 {
                m[i][j] -= f * m[k][j];
            }
            rhs[i] -= f * rhs[k];
        }
    }
    let mut x = [0.0; 4];
    for i in (0..4).rev() {
        let s: f64 = ((i + 1)..4).map(|j| m[i][j] * x[j]).sum();
        x[i] = (rhs[i] - s) / m[i][i];
    }
    let n = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if !(n.is_finite() && n > 0.0) {
        return v;
    }
    let x = x.map(|c| c / n);
    // Keep the orientation of the input vector.
    let d: f64 = (0..4).map(|i| x[i] * v[i]).sum();
    if d < 0.0 {
        x.map(|c| -c)
    } else {
        x
    }
}

/// Full eigen-decomposition of a general real 4×4 matrix.
pub fn eigen(a: &Mat4) -> Result<Eigen4> {
    let values = eigenvalues(a)?;
    let scale = max_abs(a);
    if scale == 0.0 {
        let id: Vec<[f64; 4]> = (0..4)
            .map(|i| std::array::from_fn(|j| if i == j { 1.0 } else { 0.0 }))
            .collect();
        return Ok(Eigen4 {
            values,
            real: vec![RealEigenspace {
                value: 0.0,
                algebraic: 4,
                vectors: id,
            }],
            complex: vec![],
        });
    }
    let gap = CLUSTER_TOLERANCE * scale;
    let mut reals: Vec<f64> = Vec::new();
    let mut complex = Vec::new();
    for v in values {
        if v.im.abs() <= gap {
            reals.push(v.re);
        } else {
            complex.push(v);
        }
    }
    reals.sort_by(|x, y| y.total_cmp(x));
    let mut clusters: Vec<Vec<f64>> = Vec::new();
    for r in reals {
        match clusters.last_mut() {
            Some(c) if (c[c.len() - 1] - r).abs() <= gap => c.push(r),
            _ => clusters.push(vec![r]),
        }
    }
    let mut real = Vec::with_capacity(clusters.len());
    for c in clusters {
        let value = c.iter().sum::<f64>() / c.len() as f64;
        let mut b = *a;
        for (i, row) in b.iter_mut().enumerate() {
            row[i] -= value;
        }
        let dim = nullity(&b, gap).clamp(1, c.len());
        let mut vectors = null_space(&b, dim);
        if vectors.len() == 1 && c.len() == 1 {
            vectors[0] = refine(a, value, vectors[0], scale);
        }
        real.push(RealEigenspace {
            value,
            algebraic: c.len(),
            vectors,
        });
    }
    Ok(Eigen4 {
        values,
        real,
        complex,
    })
}

/// Euclidean residual ‖A v − λ v‖.
pub fn residual(a: &Mat4, lambda: f64, v: &[f64; 4]) -> f64 {
    (0..4)
        .map(|i| {
            let r: f64 = (0..4).map(|j| a[i][j] * v[j]).sum::<f64>() - lambda * v[i];
            r * r
        })
        .sum::<f64>()
        .sqrt()
}

/// Null vector of a complex 4×4 matrix whose smallest complete-pivoting pivot
/// is treated as zero. Used for the (non-hermitian) spin matrices.
pub fn complex_null_vector(b: &CMat4) -> [Complex64; 4] {
    let mut u = *b;
    let mut cols = [0usize, 1, 2, 3];
    for k in 0..3 {
        let (mut pi, mut pj, mut best) = (k, k, -1.0);
        for i in k..4 {
            for j in k..4 {
                if u[i][j].norm() > best {
                    best = u[i][j].norm();
                    pi = i;
                    pj = j;
                }
            }
        }
        u.swap(k, pi);
        for row in u.iter_mut() {
            row.swap(k, pj);
        }
        cols.swap(k, pj);
        if best == 0.0 {
            continue;
        }
        for i in (k + 1)..4 {
            let f = u[i][k] / u[k][k];
            u[i][k] = Complex64::new(0.0, 0.0);
            for j in (k + 1)..4 {
                let t = f * u[k][j];
                u[i][j] -= t;
            }
        }
    }
    let mut y = [Complex64::new(0.0, 0.0); 4];
    y[3] = Complex64::new(1.0, 0.0);
    for i in (0..3).rev() {
        let mut s = Complex64::new(0.0, 0.0);
        for j in (i + 1)..4 {
            s += u[i][j] * y[j];
        }
        y[i] = if u[i][i].norm() > 0.0 {
            -s / u[i][i]
        } else {
            Complex64::new(0.0, 0.0)
        };
    }
    let mut x = [Complex64::new(0.0, 0.0); 4];
    for (k, &c) in cols.iter().enumerate() {
        x[c] = y[k];
    }
    x
}
