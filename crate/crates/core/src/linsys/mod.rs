//! Linear systems of plane curves, hypothesis (*), and gap sequences read off
//! the canonical adjoint series.

mod classify;
mod config;
mod star;

use serde::Serialize;

use crate::curvegeom::{
    branch_parametrization, default_order, BranchParametrization, PlaneCurve, ProjectivePoint,
};
use crate::error::{Error, Result};
use crate::exactmath::{
    eval_monomial, monomials, ExactMatrix, Rational, TernaryForm, TruncatedSeries,
};
use crate::semigroups::{smooth_genus, GapSequence};

pub use classify::classify_table_row;
pub(crate) use classify::has_line_factor;
pub use config::{Certificate, NodalConfiguration};
pub use star::{check_hypothesis_star, HypothesisStarReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Condition {
    Through {
        point: ProjectivePoint,
    },
    Contact {
        point: ProjectivePoint,
        at_least: usize,
    },
}

/// A linear system of degree-`degree` curves given by a basis of its forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearSystem {
    pub degree: u32,
    pub basis: Vec<TernaryForm>,
    pub conditions: Vec<Condition>,
    /// `basis.len() - 1`; `-1` is the empty system.
    pub dim_projective: i64,
}

impl LinearSystem {
    fn new(degree: u32, basis: Vec<TernaryForm>, conditions: Vec<Condition>) -> Self {
        let dim_projective = basis.len() as i64 - 1;
        Self {
            degree,
            basis,
            conditions,
            dim_projective,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Kernel of `rows` (one row per member condition) applied to the basis,
    /// returned as the corresponding combinations of basis forms.
    fn restrict(&self, rows: Vec<Vec<Rational>>, extra: Vec<Condition>) -> Self {
        let mut conditions = self.conditions.clone();
        conditions.extend(extra);
        if self.basis.is_empty() || rows.is_empty() {
            return Self::new(self.degree, self.basis.clone(), conditions);
        }
        // rows index conditions, columns index basis members
        let m = ExactMatrix::from_rows(rows).expect("rectangular condition matrix");
        let basis = m
            .kernel()
            .into_iter()
            .map(|v| {
                v.iter()
                    .zip(&self.basis)
                    .fold(TernaryForm::zero(self.degree), |acc, (c, f)| {
                        &acc + &f.scale(c)
                    })
                    .primitive()
            })
            .collect();
        Self::new(self.degree, basis, conditions)
    }
}

/// All forms of degree `l` vanishing at `points`.
pub fn through_points(l: u32, points: &[ProjectivePoint]) -> LinearSystem {
    let mons = monomials(l);
    let full = LinearSystem::new(
        l,
        mons.iter()
            .map(|e| {
                TernaryForm::from_terms(l, [(*e, Rational::from_integer(1.into()))])
                    .expect("monomial")
            })
            .collect(),
        Vec::new(),
    );
    let rows = points
        .iter()
        .map(|p| mons.iter().map(|e| eval_monomial(e, p.coords())).collect())
        .collect();
    let conditions = points
        .iter()
        .map(|p| Condition::Through { point: p.clone() })
        .collect();
    full.restrict(rows, conditions)
}

/// Members of `sys` meeting the branch of `c` at `p` with multiplicity at least `m`.
pub fn with_min_multiplicity(
    sys: &LinearSystem,
    c: &PlaneCurve,
    p: &ProjectivePoint,
    m: usize,
) -> Result<LinearSystem> {
    if m == 0 {
        return Ok(sys.clone());
    }
    let branch = branch_parametrization(c, p, m)?;
    let series = branch.pullback_all(&sys.basis);
    Ok(sys.restrict(
        coefficient_rows(&series, m),
        vec![Condition::Contact {
            point: p.clone(),
            at_least: m,
        }],
    ))
}

/// Transposed coefficient table: row `j` holds the `u^j` coefficients of every series.
fn coefficient_rows(series: &[TruncatedSeries], m: usize) -> Vec<Vec<Rational>> {
    (0..m)
        .map(|j| series.iter().map(|s| s.coeff(j)).collect())
        .collect()
}

/// Distinct vanishing orders attained by the span of `series`, plus the number of
/// independent members vanishing to the full truncation order.
pub(crate) fn attained_orders(series: &[TruncatedSeries], order: usize) -> (Vec<usize>, usize) {
    if series.is_empty() {
        return (Vec::new(), 0);
    }
    let rows: Vec<Vec<Rational>> = series
        .iter()
        .map(|s| (0..order).map(|j| s.coeff(j)).collect())
        .collect();
    let m = ExactMatrix::from_rows(rows).expect("rectangular series table");
    let pivots = if order == 0 {
        Vec::new()
    } else {
        m.rref().pivots
    };
    let deficit = series.len() - pivots.len();
    (pivots, deficit)
}

/// The canonical adjoints: curves of degree `d - 3` through every node.
pub fn canonical_adjoints(c: &PlaneCurve, nodes: &[ProjectivePoint]) -> Result<LinearSystem> {
    let d = c.degree();
    if d < 3 {
        return Err(Error::InvalidArgument(format!(
            "canonical adjoints need degree at least 3, got {d}"
        )));
    }
    let sys = through_points(d - 3, nodes);
    let g = smooth_genus(d as u64) as i64 - nodes.len() as i64;
    if sys.basis.len() as i64 != g {
        return Err(Error::InconsistentConfiguration(format!(
            "{} canonical adjoints through {} nodes, expected genus {g}",
            sys.basis.len(),
            nodes.len()
        )));
    }
    Ok(sys)
}

/// Weierstrass gaps at `p`: one plus each vanishing order of the canonical series.
pub fn gap_sequence_at(
    c: &PlaneCurve,
    nodes: &[ProjectivePoint],
    p: &ProjectivePoint,
) -> Result<GapSequence> {
    let sys = canonical_adjoints(c, nodes)?;
    let g = sys.basis.len();
    let base = default_order(c.degree());
    for order in [base, 2 * base] {
        let branch: BranchParametrization = branch_parametrization(c, p, order)?;
        let (pivots, deficit) = attained_orders(&branch.pullback_all(&sys.basis), order);
        if deficit == 0 {
            return Ok(GapSequence(
                pivots.into_iter().map(|v| v as u64 + 1).collect(),
            ));
        }
        if order == 2 * base {
            return Err(Error::InconsistentConfiguration(format!(
                "only {} of {g} vanishing orders found below {order}",
                g - deficit
            )));
        }
    }
    unreachable!()
}
