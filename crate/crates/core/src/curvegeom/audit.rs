//! Global check that a curve has exactly the prescribed ordinary nodes as singularities.

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use super::{is_ordinary_node, PlaneCurve, ProjectivePoint};
use crate::error::Result;
use crate::exactmath::{
    common_root_estimate, coprime_certificate, resultant_in_x, squarefree_part, univariate_gcd,
    Rational, TernaryForm, UniPoly,
};
use crate::sampling;

/// Bound on the entries of the random coordinate change.
pub const AUDIT_ENTRY_BOUND: i64 = 10_000;

const MAX_ATTEMPTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularAuditReport {
    pub certified: bool,
    /// Exact when certified; otherwise extra affine points are counted from a modular image.
    pub distinct_singular_points_found: usize,
    pub matched_nodes: Vec<ProjectivePoint>,
    pub seed: u64,
    pub attempts: usize,
    /// Why certification failed, if it did.
    pub failure: Option<String>,
}

type Matrix3 = [[Rational; 3]; 3];

fn random_matrix(rng: &mut impl Rng, bound: i64) -> Option<(Matrix3, Matrix3)> {
    let m: Matrix3 = std::array::from_fn(|_| {
        std::array::from_fn(|_| Rational::from_integer(sampling::int(rng, bound).into()))
    });
    let inv = inverse(&m)?;
    Some((m, inv))
}

fn inverse(m: &Matrix3) -> Option<Matrix3> {
    let cof = |r: usize, c: usize| {
        let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
        let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
        &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1]
    };
    let det: Rational = (0..3).map(|c| &m[0][c] * cof(0, c)).sum();
    if det.is_zero() {
        return None;
    }
    Some(std::array::from_fn(|r| {
        std::array::from_fn(|c| cof(c, r) / &det)
    }))
}

/// Coefficients of `form(x, y, 1)` as a polynomial in `y` over `Q[x]`, padded to `formal` + 1 entries.
fn y_coeffs(form: &TernaryForm, formal: usize) -> Vec<UniPoly> {
    let mut cols = vec![vec![Rational::zero(); form.degree() as usize + 1]; formal + 1];
    for (e, c) in form.terms() {
        cols[e[1] as usize][e[0] as usize] += c;
    }
    cols.into_iter().map(UniPoly::new).collect()
}

/// `form` restricted to a line, as a polynomial in `t`: `point + t·dir` with `point`, `dir` fixed.
fn restrict(form: &TernaryForm, point: &[Rational; 3], dir: &[Rational; 3]) -> UniPoly {
    let lin = |i: usize| UniPoly::new(vec![point[i].clone(), dir[i].clone()]);
    let coords = [lin(0), lin(1), lin(2)];
    let mut out = UniPoly::zero();
    for (e, c) in form.terms() {
        let mut t = UniPoly::constant(c.clone());
        for (k, &p) in e.iter().enumerate() {
            for _ in 0..p {
                t = &t * &coords[k];
            }
        }
        out = &out + &t;
    }
    out
}

fn gcd_all(polys: &[UniPoly]) -> Result<UniPoly> {
    let mut g = UniPoly::zero();
    for p in polys {
        g = if g.is_zero() {
            p.clone()
        } else if p.is_zero() {
            g
        } else {
            univariate_gcd(&g, p)?
        };
    }
    Ok(g)
}

fn squarefree_degree(p: &UniPoly) -> Result<usize> {
    if p.is_zero() {
        return Ok(usize::MAX);
    }
    Ok(squarefree_part(p)?.degree().unwrap_or(0))
}

/// Certifies that the singular points of `c` are exactly `nodes` and that each is
/// an ordinary node. Uses a seeded random coordinate change with entries bounded
/// by [`AUDIT_ENTRY_BOUND`].
pub fn singular_locus_audit(
    c: &PlaneCurve,
    nodes: &[ProjectivePoint],
    seed: u64,
) -> Result<SingularAuditReport> {
    singular_locus_audit_with(c, nodes, seed, AUDIT_ENTRY_BOUND)
}

pub fn singular_locus_audit_with(
    c: &PlaneCurve,
    nodes: &[ProjectivePoint],
    seed: u64,
    entry_bound: i64,
) -> Result<SingularAuditReport> {
    let mut report = SingularAuditReport {
        certified: false,
        distinct_singular_points_found: 0,
        matched_nodes: Vec::new(),
        seed,
        attempts: 0,
        failure: None,
    };
    for (i, p) in nodes.iter().enumerate() {
        if nodes[..i].contains(p) {
            report.failure = Some(format!("node {p} listed twice"));
            return Ok(report);
        }
        match is_ordinary_node(c, p) {
            Ok(true) => {}
            Ok(false) => {
                report.failure = Some(format!("{p} is not an ordinary node"));
                return Ok(report);
            }
            Err(e) => {
                report.failure = Some(e.to_string());
                return Ok(report);
            }
        }
    }

    let d = c.degree() as usize;
    if d < 2 {
        report.certified = nodes.is_empty();
        if !report.certified {
            report.failure = Some("a line has no singular points".into());
        }
        return Ok(report);
    }
    let mut rng = sampling::rng(seed);
    loop {
        report.attempts += 1;
        if report.attempts > MAX_ATTEMPTS {
            return Err(crate::Error::RetryExhausted {
                budget: MAX_ATTEMPTS,
                last: "degenerate coordinate change".into(),
            });
        }
        let Some((m, inv)) = random_matrix(&mut rng, entry_bound) else {
            continue;
        };
        let g = c.form().compose_linear(&m);
        if g.coeff(&[0, d as u32, 0]).is_zero() {
            continue;
        }
        let moved: Vec<ProjectivePoint> = nodes
            .iter()
            .map(|p| p.transform(&inv))
            .collect::<Result<_>>()?;
        if moved.iter().any(|p| !p.is_affine()) {
            continue;
        }
        let xs: Vec<&Rational> = moved.iter().map(|p| &p.coords()[0]).collect();
        if (0..xs.len()).any(|i| xs[..i].contains(&xs[i])) {
            continue;
        }
        return audit_in_general_position(&g, d, nodes, &moved, report);
    }
}

fn audit_in_general_position(
    g: &TernaryForm,
    d: usize,
    nodes: &[ProjectivePoint],
    moved: &[ProjectivePoint],
    mut report: SingularAuditReport,
) -> Result<SingularAuditReport> {
    let [gx, gy, gz] = g.gradient();
    let f0 = y_coeffs(g, d);
    let fx = y_coeffs(&gx, d - 1);
    let fy = y_coeffs(&gy, d - 1);
    let r1 = resultant_in_x(&f0, &fx, d * (d - 1))?;
    let r2 = resultant_in_x(&f0, &fy, d * (d - 1))?;
    let r3 = resultant_in_x(&fx, &fy, (d - 1) * (d - 1))?;
    let resultants: Vec<UniPoly> = [r1, r2, r3].into_iter().filter(|r| !r.is_zero()).collect();
    if resultants.len() < 2 {
        report.failure = Some("curve has a multiple component".into());
        report.distinct_singular_points_found = usize::MAX;
        return Ok(report);
    }

    // singular points on the line at infinity z = 0 (all have x != 0 here)
    let e1 = [Rational::one(), Rational::zero(), Rational::zero()];
    let e2 = [Rational::zero(), Rational::one(), Rational::zero()];
    let inf_gcd = gcd_all(&[g, &gx, &gy, &gz].map(|h| restrict(h, &e1, &e2)))?;
    let inf_count = squarefree_degree(&inf_gcd)?;

    // every node abscissa is a common root; strip those factors and prove the rest coprime
    let mut stripped = resultants;
    for p in moved {
        let x = &p.coords()[0];
        let factor = UniPoly::linear_root(x.clone());
        for r in stripped.iter_mut() {
            if !r.eval(x).is_zero() {
                report.failure = Some("a node is missing from the discriminant locus".into());
                return Ok(report);
            }
            while r.eval(x).is_zero() {
                *r = r.div_exact(&factor)?;
            }
        }
    }
    let extra_affine = if coprime_certificate(&stripped).is_some() {
        0
    } else {
        common_root_estimate(&stripped).max(1)
    };
    report.distinct_singular_points_found = nodes.len() + extra_affine + inf_count;
    if extra_affine > 0 {
        report.failure = Some(format!(
            "about {extra_affine} singular abscissae beyond the {} nodes",
            nodes.len()
        ));
        return Ok(report);
    }
    if inf_count != 0 {
        report.failure = Some("singular point on the line at infinity".into());
        return Ok(report);
    }
    // exactly one singular point above each node abscissa
    for (p, orig) in moved.iter().zip(nodes) {
        let [x, y, _] = p.coords();
        let base = [x.clone(), Rational::zero(), Rational::one()];
        let dir = [Rational::zero(), Rational::one(), Rational::zero()];
        let fiber = gcd_all(&[g, &gx, &gy].map(|h| restrict(h, &base, &dir)))?;
        if fiber.is_zero() || squarefree_part(&fiber)? != UniPoly::linear_root(y.clone()) {
            report.failure = Some(format!("extra singular point in the fiber through {orig}"));
            return Ok(report);
        }
    }
    report.matched_nodes = nodes.to_vec();
    report.certified = true;
    Ok(report)
}
