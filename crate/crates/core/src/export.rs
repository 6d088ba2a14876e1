//! Byte-stable CSV writers. Every number is printed with 17 significant
//! digits in scientific notation and every line ends in a bare LF.

use std::io::{self, Write};

use crate::example::{EigenvalueMap, FlowLine};
use crate::field::FieldConfig;
use crate::minkowski::FourVector;
use crate::stress::stress_total;

pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn row<W: Write>(w: &mut W, cells: impl IntoIterator<Item = String>) -> io::Result<()> {
    let line: Vec<String> = cells.into_iter().collect();
    w.write_all(line.join(",").as_bytes())?;
    w.write_all(b"\n")
}

/// Header `x1\x2` followed by the x² values; then one row per x¹ value.
pub fn write_eigenmap<W: Write>(map: &EigenvalueMap, mut w: W) -> io::Result<()> {
    row(
        &mut w,
        std::iter::once("x1\\x2".to_string()).chain(map.x2.iter().map(|&x| num(x))),
    )?;
    for (x1, values) in map.x1.iter().zip(&map.values) {
        row(
            &mut w,
            std::iter::once(num(*x1)).chain(values.iter().map(|&v| num(v))),
        )?;
    }
    w.flush()
}

/// Columns: seed index, τ, t, x¹, x², u⁰, u¹, u², branch.
pub fn write_flowlines<W: Write>(lines: &[FlowLine], mut w: W) -> io::Result<()> {
    row(
        &mut w,
        ["seed", "tau", "t", "x1", "x2", "u0", "u1", "u2", "branch"].map(String::from),
    )?;
    for (s, line) in lines.iter().enumerate() {
        for (n, ((x, u), b)) in line
            .events
            .iter()
            .zip(&line.velocities)
            .zip(&line.branches)
            .enumerate()
        {
            row(
                &mut w,
                [
                    s.to_string(),
                    num(line.step * n as f64),
                    num(x[0]),
                    num(x[1]),
                    num(x[2]),
                    num(u[0]),
                    num(u[1]),
                    num(u[2]),
                    b.as_str().to_string(),
                ],
            )?;
        }
    }
    w.flush()
}

/// Columns: event, φ^μ (re, im), E and B of G_μν (re, im), T_00 and |∂·φ|.
pub fn write_field<W: Write>(
    config: &FieldConfig,
    events: &[FourVector],
    mut w: W,
) -> io::Result<()> {
    let mut header: Vec<String> = ["t", "x1", "x2", "x3"].map(String::from).to_vec();
    for mu in 0..4 {
        header.push(format!("phi{mu}_re"));
        header.push(format!("phi{mu}_im"));
    }
    for f in ["e", "b"] {
        for i in 1..4 {
            header.push(format!("{f}{i}_re"));
            header.push(format!("{f}{i}_im"));
        }
    }
    header.push("t00".into());
    header.push("div_abs".into());
    row(&mut w, header)?;
    for x in events {
        let smp = config.evaluate(x);
        let mut cells: Vec<String> = x.0.iter().map(|&c| num(c)).collect();
        for z in smp.phi.0 {
            cells.push(num(z.re));
            cells.push(num(z.im));
        }
        for z in smp.g.e.iter().chain(smp.g.b.iter()) {
            cells.push(num(z.re));
            cells.push(num(z.im));
        }
        cells.push(num(stress_total(&smp, config.mass()).total.0[0][0]));
        cells.push(num(config.divergence(x).norm()));
        row(&mut w, cells)?;
    }
    w.flush()
}
