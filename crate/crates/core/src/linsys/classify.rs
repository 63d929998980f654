//! Decides which row of the classification table a configuration realizes.

use super::{gap_sequence_at, through_points, NodalConfiguration};
use crate::curvegeom::{intersection_multiplicity, ProjectivePoint};
use crate::error::{Error, Result};
use crate::exactmath::{TernaryForm, Valuation};
use crate::semigroups::{table_row, TableRowId};

/// Some line containing every point of `pts` (at least two distinct points).
fn common_line(pts: &[&ProjectivePoint]) -> Option<TernaryForm> {
    let (a, rest) = pts.split_first()?;
    let b = rest.iter().find(|b| **b != *a)?;
    let l = a.line_to(b);
    pts.iter().all(|p| p.is_on(&l)).then_some(l)
}

/// Indices of `k`-element subsets of `0..n`.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

/// Line through the `k` nodes of some subset; also reports whether `P` is on it.
fn collinear_subset(nodes: &[ProjectivePoint], p: &ProjectivePoint, k: usize) -> Option<bool> {
    let mut found: Option<bool> = None;
    for idx in subsets(nodes.len(), k) {
        let pts: Vec<&ProjectivePoint> = idx.iter().map(|&i| &nodes[i]).collect();
        if let Some(l) = common_line(&pts) {
            let with_p = p.is_on(&l);
            found = Some(found.unwrap_or(false) || with_p);
        }
    }
    found
}

pub(crate) fn has_line_factor(conic: &TernaryForm) -> bool {
    // a conic is reducible iff its symmetric matrix is singular
    let c = |e: [u32; 3]| conic.coeff(&e);
    let two = crate::exactmath::q(2);
    let m = [
        [&two * c([2, 0, 0]), c([1, 1, 0]), c([1, 0, 1])],
        [c([1, 1, 0]), &two * c([0, 2, 0]), c([0, 1, 1])],
        [c([1, 0, 1]), c([0, 1, 1]), &two * c([0, 0, 2])],
    ];
    let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    num_traits::Zero::is_zero(&det)
}

fn conic_contact(cfg: &NodalConfiguration, conic: &TernaryForm) -> Result<usize> {
    let c = cfg.require_curve()?;
    match intersection_multiplicity(c, conic, &cfg.p, 2 * cfg.d as usize + 2)? {
        Valuation::Exact(e) => Ok(e),
        Valuation::AtLeast(_) => Err(Error::Unclassified(
            "conic shares a component with the curve".into(),
        )),
    }
}

/// Evaluates the geometric predicates of the table for `1 ≤ δ ≤ 5`.
fn predicted_row(cfg: &NodalConfiguration) -> Result<TableRowId> {
    let s = &cfg.nodes;
    let p = &cfg.p;
    let delta = s.len();
    let row = |j: u8| Ok(TableRowId::new(delta as u8, j));
    match delta {
        1 => row(1),
        2 => row(if common_line(&[&s[0], &s[1], p]).is_some() {
            2
        } else {
            1
        }),
        3 => match collinear_subset(s, p, 3) {
            Some(true) => row(3),
            Some(false) => row(2),
            None => row(1),
        },
        4 => {
            match collinear_subset(s, p, 4) {
                Some(true) => return row(5),
                Some(false) => return row(4),
                None => {}
            }
            match collinear_subset(s, p, 3) {
                Some(true) => return row(3),
                Some(false) => return row(1),
                None => {}
            }
            let mut pts = s.clone();
            pts.push(p.clone());
            let conics = through_points(2, &pts);
            if conics.dim_projective != 0 {
                return Err(Error::Unclassified(
                    "no unique conic through the nodes and P".into(),
                ));
            }
            match conic_contact(cfg, &conics.basis[0])? {
                1 => row(1),
                2 if !has_line_factor(&conics.basis[0]) => row(2),
                e => Err(Error::Unclassified(format!(
                    "conic through nodes and P has contact {e}"
                ))),
            }
        }
        5 => {
            match collinear_subset(s, p, 5) {
                Some(true) => return row(7),
                Some(false) => return row(6),
                None => {}
            }
            match collinear_subset(s, p, 4) {
                Some(true) => return row(5),
                Some(false) => return row(4),
                None => {}
            }
            let conics = through_points(2, s);
            if conics.dim_projective != 0 {
                return Err(Error::Unclassified(
                    "no unique conic through the nodes".into(),
                ));
            }
            let conic = &conics.basis[0];
            if !p.is_on(conic) {
                return row(1);
            }
            if has_line_factor(conic) {
                return Err(Error::Unclassified(
                    "the conic through the nodes and P is reducible".into(),
                ));
            }
            match conic_contact(cfg, conic)? {
                1 => row(2),
                2 => row(3),
                e => Err(Error::Unclassified(format!(
                    "conic through nodes and P has contact {e}"
                ))),
            }
        }
        _ => Err(Error::InvalidArgument(format!(
            "the table covers 1 ≤ δ ≤ 5, got δ = {delta}"
        ))),
    }
}

/// Matches the configuration to a table row by its geometric predicates, then
/// cross-checks against the gap sequence computed from the canonical adjoints.
pub fn classify_table_row(cfg: &NodalConfiguration) -> Result<TableRowId> {
    let id = predicted_row(cfg)?;
    if let Some(c) = &cfg.curve {
        let gaps = gap_sequence_at(c, &cfg.nodes, &cfg.p)?;
        let expected = table_row(cfg.d as u64, id)?.gaps();
        if gaps != expected {
            return Err(Error::Unclassified(format!(
                "predicates select {id} with gaps {expected}, but the curve has gaps {gaps}"
            )));
        }
    }
    Ok(id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn abstract_cfg(d: u32, nodes: &[(i64, i64)]) -> NodalConfiguration {
        NodalConfiguration {
            d,
            curve: None,
            nodes: nodes
                .iter()
                .map(|&(x, y)| ProjectivePoint::from_i64(x, y, 1))
                .collect(),
            p: ProjectivePoint::from_i64(0, 0, 1),
            t: TernaryForm::linear_i64(0, 1, 0),
            aux_forms: BTreeMap::new(),
            aux_points: BTreeMap::new(),
            seed: None,
        }
    }

    #[test]
    fn collinearity_predicates() {
        let id = |d, n: &[(i64, i64)]| classify_table_row(&abstract_cfg(d, n)).unwrap();
        assert_eq!(id(5, &[(1, 2)]), TableRowId::new(1, 1));
        assert_eq!(id(5, &[(1, 2), (2, 4)]), TableRowId::new(2, 2));
        assert_eq!(id(5, &[(1, 2), (2, 5)]), TableRowId::new(2, 1));
        assert_eq!(id(7, &[(1, 2), (2, 4), (3, 6)]), TableRowId::new(3, 3));
        assert_eq!(id(7, &[(1, 2), (2, 3), (3, 4)]), TableRowId::new(3, 2));
        assert_eq!(id(7, &[(1, 2), (2, 3), (5, 4)]), TableRowId::new(3, 1));
        assert_eq!(
            id(7, &[(1, 2), (2, 4), (3, 6), (1, 5)]),
            TableRowId::new(4, 3)
        );
        assert_eq!(
            id(9, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 7)]),
            TableRowId::new(5, 4)
        );
    }

    #[test]
    fn conic_rows_need_a_curve() {
        assert!(classify_table_row(&abstract_cfg(7, &[(1, 2), (2, 3), (5, 4), (-1, 3)])).is_err());
        assert!(classify_table_row(&abstract_cfg(
            7,
            &[(1, 2), (2, 3), (5, 4), (-1, 3), (-2, 7), (3, 3)]
        ))
        .is_err());
    }
}
