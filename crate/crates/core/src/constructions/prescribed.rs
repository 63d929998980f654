//! Nodal curves with prescribed nodes and a prescribed total inflection point,
//! drawn from the linear system those conditions cut out.

use std::collections::BTreeMap;

use rand::Rng;

use super::retry_budget;
use crate::curvegeom::{PlaneCurve, ProjectivePoint};
use crate::error::{Error, Result};
use crate::exactmath::{
    eval_monomial, monomials, q, ExactMatrix, Rational, TernaryForm, TruncatedSeries,
};
use crate::linsys::{has_line_factor, NodalConfiguration};
use crate::sampling;

/// Coefficient vectors (in `monomials(d)` order) of degree-`d` forms singular at
/// every node and meeting `t` only at `p` (with multiplicity `d`).
fn prescribed_system(
    d: u32,
    nodes: &[ProjectivePoint],
    p: &ProjectivePoint,
    t: &TernaryForm,
) -> Result<Vec<Vec<Rational>>> {
    let mons = monomials(d);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for s in nodes {
        for var in 0..3 {
            rows.push(
                mons.iter()
                    .map(|e| {
                        if e[var] == 0 {
                            return q(0);
                        }
                        let mut lower = *e;
                        lower[var] -= 1;
                        q(e[var] as i64) * eval_monomial(&lower, s.coords())
                    })
                    .collect(),
            );
        }
    }
    // F(p + u·r) has no terms below u^d, where r is a second point of t
    let r = (0..3)
        .filter_map(|i| {
            let mut c = [0, 0, 0];
            c[i] = 1;
            ProjectivePoint::meet(t, &TernaryForm::linear_i64(c[0], c[1], c[2]))
        })
        .find(|x| x != p)
        .ok_or_else(|| Error::InvalidArgument(format!("{t} is not a line")))?;
    let order = d as usize;
    let line: [TruncatedSeries; 3] = std::array::from_fn(|i| {
        TruncatedSeries::from_coeffs(vec![p.coords()[i].clone(), r.coords()[i].clone()], order)
    });
    let restricted: Vec<TruncatedSeries> = mons
        .iter()
        .map(|e| {
            TernaryForm::from_terms(d, [(*e, q(1))])
                .expect("monomial")
                .eval_series(&line)
        })
        .collect();
    for j in 0..order {
        rows.push(restricted.iter().map(|s| s.coeff(j)).collect());
    }
    Ok(ExactMatrix::from_rows(rows)?.kernel())
}

/// A seeded member of the prescribed system, or `None` when the system is empty.
pub(crate) fn prescribed_member(
    d: u32,
    nodes: &[ProjectivePoint],
    p: &ProjectivePoint,
    t: &TernaryForm,
    rng: &mut impl Rng,
) -> Result<Option<TernaryForm>> {
    let basis = prescribed_system(d, nodes, p, t)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let n = basis[0].len();
    let mut coeffs = vec![q(0); n];
    for v in &basis {
        let c = q(sampling::int(rng, sampling::HEIGHT));
        for (acc, x) in coeffs.iter_mut().zip(v) {
            *acc += &c * x;
        }
    }
    let f = TernaryForm::from_dense(d, &coeffs).primitive();
    Ok((!f.is_zero()).then_some(f))
}

/// Geometry of one witness before a curve is chosen.
struct Layout {
    nodes: Vec<ProjectivePoint>,
    p: ProjectivePoint,
    t: TernaryForm,
    aux_forms: BTreeMap<String, TernaryForm>,
}

/// Samples layouts and members until one certifies.
fn realize(
    d: u32,
    seed: u64,
    mut layout: impl FnMut(&mut rand_chacha::ChaCha8Rng) -> Option<Layout>,
) -> Result<NodalConfiguration> {
    let budget = retry_budget();
    let mut rng = sampling::rng(seed);
    let mut last = String::from("no admissible layout");
    for _ in 0..budget {
        let Some(lay) = layout(&mut rng) else {
            continue;
        };
        let Some(form) = prescribed_member(d, &lay.nodes, &lay.p, &lay.t, &mut rng)? else {
            last = "the prescribed linear system is empty".into();
            continue;
        };
        let cfg = NodalConfiguration {
            d,
            curve: Some(PlaneCurve::new(form)?),
            nodes: lay.nodes,
            p: lay.p,
            t: lay.t,
            aux_forms: lay.aux_forms,
            aux_points: BTreeMap::new(),
            seed: Some(seed),
        };
        let cert = cfg.certify(seed);
        if cert.certified {
            return Ok(cfg);
        }
        last = cert.failure.unwrap_or_default();
    }
    Err(Error::RetryExhausted { budget, last })
}

fn no_three_collinear(pts: &[ProjectivePoint]) -> bool {
    let n = pts.len();
    (0..n).all(|i| {
        (0..i).all(|j| (0..j).all(|k| !ProjectivePoint::collinear(&pts[i], &pts[j], &pts[k])))
    })
}

fn check_params(d: u32, delta: usize) -> Result<()> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!("need d ≥ 3, got {d}")));
    }
    let g = ((d - 1) * (d - 2) / 2) as usize;
    if delta > g {
        return Err(Error::InvalidArgument(format!(
            "δ = {delta} exceeds the genus {g} of a smooth curve of degree {d}"
        )));
    }
    Ok(())
}

/// Nodes in general position (no three collinear, none on `T`, `P` on no line through two of them).
pub fn general_config(d: u32, delta: usize, seed: u64) -> Result<NodalConfiguration> {
    check_params(d, delta)?;
    realize(d, seed, |rng| {
        let p = sampling::affine_point(rng);
        let t = sampling::line_through(rng, &p);
        let nodes: Vec<ProjectivePoint> = (0..delta).map(|_| sampling::affine_point(rng)).collect();
        let mut all = nodes.clone();
        all.push(p.clone());
        if !no_three_collinear(&all) || nodes.iter().any(|s| s.is_on(&t)) {
            return None;
        }
        Some(Layout {
            nodes,
            p,
            t,
            aux_forms: BTreeMap::new(),
        })
    })
}

/// `on_line` of the `δ` nodes on a line `L0`, with `P` on `L0` iff `include_p`;
/// the other nodes, and `P` otherwise, are in general position.
pub fn partially_collinear_config(
    d: u32,
    delta: usize,
    on_line: usize,
    include_p: bool,
    seed: u64,
) -> Result<NodalConfiguration> {
    check_params(d, delta)?;
    if on_line > delta || on_line < 2 {
        return Err(Error::InvalidArgument(format!(
            "cannot put {on_line} of {delta} nodes on a line"
        )));
    }
    // each node meets L0 twice and P once more; beyond d the line is a component
    let load = 2 * on_line + include_p as usize;
    if load > d as usize {
        return Err(Error::InconsistentConfiguration(format!(
            "{on_line} nodes{} on a line meet a curve of degree {d} in {load} > {d} points",
            if include_p { " and P" } else { "" }
        )));
    }
    realize(d, seed, |rng| {
        let l0 = sampling::line(rng);
        let p = if include_p {
            sampling::point_on_line(rng, &l0, &[])
        } else {
            sampling::affine_point(rng)
        };
        if !include_p && p.is_on(&l0) {
            return None;
        }
        let t = sampling::line_through(rng, &p);
        if t.proportional(&l0) {
            return None;
        }
        let mut nodes: Vec<ProjectivePoint> = Vec::new();
        for _ in 0..on_line {
            let mut excl = nodes.clone();
            excl.push(p.clone());
            nodes.push(sampling::point_on_line(rng, &l0, &excl));
        }
        for _ in on_line..delta {
            nodes.push(sampling::affine_point(rng));
        }
        if nodes.iter().any(|s| s.is_on(&t)) {
            return None;
        }
        // no collinear triples other than those forced on L0
        let mut all = nodes.clone();
        all.push(p.clone());
        let on_l0 = |x: &ProjectivePoint| x.is_on(&l0);
        let n = all.len();
        for i in 0..n {
            for j in 0..i {
                for k in 0..j {
                    let forced = on_l0(&all[i]) && on_l0(&all[j]) && on_l0(&all[k]);
                    if !forced && ProjectivePoint::collinear(&all[i], &all[j], &all[k]) {
                        return None;
                    }
                }
            }
        }
        let aux_forms = BTreeMap::from([("L0".to_string(), l0)]);
        Some(Layout {
            nodes,
            p,
            t,
            aux_forms,
        })
    })
}

/// All `δ` nodes on one line, with `P` on it iff `include_p`.
pub fn collinear_config(
    d: u32,
    delta: usize,
    include_p: bool,
    seed: u64,
) -> Result<NodalConfiguration> {
    partially_collinear_config(d, delta, delta, include_p, seed)
}

/// The `δ` nodes on an irreducible conic through `P` meeting `T` there with
/// multiplicity `contact` (1 or 2).
pub fn conic_config(d: u32, delta: usize, contact: u8, seed: u64) -> Result<NodalConfiguration> {
    check_params(d, delta)?;
    if !(1..=2).contains(&contact) {
        return Err(Error::InvalidArgument(format!(
            "conic contact must be 1 or 2, got {contact}"
        )));
    }
    let load = 2 * delta + contact as usize;
    if load > 2 * d as usize {
        return Err(Error::InconsistentConfiguration(format!(
            "a conic through {delta} nodes with contact {contact} meets a curve of degree {d} in {load} > {} points",
            2 * d
        )));
    }
    realize(d, seed, |rng| {
        let p = sampling::affine_point(rng);
        let t = sampling::line_through(rng, &p);
        // conics through p whose tangent there is t (contact 2) or a second line m (contact 1)
        let tangent = if contact == 2 {
            t.clone()
        } else {
            sampling::line_through(rng, &p)
        };
        if contact == 1 && tangent.proportional(&t) {
            return None;
        }
        let conic = conic_with_tangent(rng, &p, &tangent)?;
        let mut nodes: Vec<ProjectivePoint> = Vec::new();
        while nodes.len() < delta {
            let m = sampling::line_through(rng, &p);
            let s = second_intersection(&conic, &p, &m)?;
            if s != p && !nodes.contains(&s) && !s.is_on(&t) && s.is_affine() {
                nodes.push(s);
            }
        }
        let aux_forms = BTreeMap::from([("Q".to_string(), conic)]);
        Some(Layout {
            nodes,
            p,
            t,
            aux_forms,
        })
    })
}

/// A random irreducible conic through `p` tangent to `tangent` there.
fn conic_with_tangent(
    rng: &mut impl Rng,
    p: &ProjectivePoint,
    tangent: &TernaryForm,
) -> Option<TernaryForm> {
    // tangent·(random line) + c·(random line through p)^2 has tangent `tangent` at p
    let a = sampling::line(rng);
    let b = sampling::line_through(rng, p);
    let c = q(sampling::nonzero_int(rng, sampling::HEIGHT));
    let conic = &(tangent * &a) + &(&b * &b).scale(&c);
    if has_line_factor(&conic) || p.is_on(&a) {
        return None;
    }
    Some(conic)
}

/// The point where a line `m` through `p` meets the conic again.
fn second_intersection(
    conic: &TernaryForm,
    p: &ProjectivePoint,
    m: &TernaryForm,
) -> Option<ProjectivePoint> {
    let r = (0..3)
        .filter_map(|i| {
            let mut c = [0, 0, 0];
            c[i] = 1;
            ProjectivePoint::meet(m, &TernaryForm::linear_i64(c[0], c[1], c[2]))
        })
        .find(|x| x != p)?;
    // conic(p + u r) = u (alpha + beta u)
    let line: [TruncatedSeries; 3] = std::array::from_fn(|i| {
        TruncatedSeries::from_coeffs(vec![p.coords()[i].clone(), r.coords()[i].clone()], 3)
    });
    let s = conic.eval_series(&line);
    let (alpha, beta) = (s.coeff(1), s.coeff(2));
    if beta == q(0) {
        return None;
    }
    let u = -alpha / beta;
    let coords: [Rational; 3] = std::array::from_fn(|i| &p.coords()[i] + &u * &r.coords()[i]);
    ProjectivePoint::from_coords(coords).ok()
}
