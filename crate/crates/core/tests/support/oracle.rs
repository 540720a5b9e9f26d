//! Closed-form eigenvalues from the characteristic polynomial, for
//! matrices of order at most three. Independent of the Jacobi solver.

use std::f64::consts::PI;

/// Roots of `det(xI − M)` in descending order.
pub fn char_poly_eigenvalues(m: &[Vec<f64>]) -> Vec<f64> {
    let mut roots = match m.len() {
        0 => vec![],
        1 => vec![m[0][0]],
        2 => {
            // x² − tr·x + det
            let tr = m[0][0] + m[1][1];
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
            vec![(tr + disc) / 2.0, (tr - disc) / 2.0]
        }
        3 => cubic_roots(m),
        n => panic!("oracle supports order <= 3, got {n}"),
    };
    roots.sort_by(|a, b| b.total_cmp(a));
    roots
}

/// `x³ − c₁x² + c₂x − c₃` with `c₁ = tr`, `c₂` the sum of principal 2×2
/// minors and `c₃ = det`, solved by the trigonometric method for three
/// real roots.
fn cubic_roots(m: &[Vec<f64>]) -> Vec<f64> {
    let c1 = m[0][0] + m[1][1] + m[2][2];
    let c2 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2]
        - m[1][2] * m[2][1];
    let c3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);

    // x = t + c1/3 gives t³ + p·t + q = 0
    let shift = c1 / 3.0;
    let p = c2 - c1 * c1 / 3.0;
    let q = -2.0 * c1.powi(3) / 27.0 + c1 * c2 / 3.0 - c3;
    if p.abs() < 1e-14 {
        return vec![shift; 3];
    }
    let amplitude = 2.0 * (-p / 3.0).sqrt();
    let arg = ((3.0 * q) / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
    let phi = arg.acos() / 3.0;
    (0..3)
        .map(|k| shift + amplitude * (phi - 2.0 * PI * k as f64 / 3.0).cos())
        .collect()
}

#[allow(dead_code)]
pub fn energy_about(values: &[f64], center: f64) -> f64 {
    values.iter().map(|x| (x - center).abs()).sum()
}
