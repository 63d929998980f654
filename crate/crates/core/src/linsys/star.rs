//! The emptiness and multiplicity conditions that force the minimal gap sequence.

use serde::{Deserialize, Serialize};

use super::{attained_orders, through_points, NodalConfiguration};
use crate::curvegeom::{branch_parametrization, ProjectivePoint};
use crate::error::{Error, Result};
use crate::exactmath::{TernaryForm, TruncatedSeries};
use crate::semigroups::k_of;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisStarReport {
    pub k: u64,
    /// `(ℓ, empty)` for every `ℓ < k`.
    pub empties_verified: Vec<(u64, bool)>,
    pub multiplicity_bound: u64,
    pub multiplicity_bound_verified: bool,
    /// Largest contact with the curve at `P` among degree-`k` curves through the nodes.
    /// Equals the truncation order when some member vanishes to it.
    pub max_multiplicity_found: u64,
    /// `"branch"` when measured on the curve, `"line"` when restricted to `T`.
    pub method: String,
    pub holds: bool,
}

/// A second point of the line `t`, different from `p`.
fn other_point_on(t: &TernaryForm, p: &ProjectivePoint) -> Result<ProjectivePoint> {
    (0..3)
        .filter_map(|i| {
            let mut c = [0, 0, 0];
            c[i] = 1;
            ProjectivePoint::meet(t, &TernaryForm::linear_i64(c[0], c[1], c[2]))
        })
        .find(|q| q != p)
        .ok_or_else(|| Error::InvalidArgument(format!("{t} is not a line")))
}

fn line_expansions(
    t: &TernaryForm,
    p: &ProjectivePoint,
    forms: &[TernaryForm],
    order: usize,
) -> Result<Vec<TruncatedSeries>> {
    if !p.is_on(t) {
        return Err(Error::PointNotOnCurve(format!("{p} is not on {t}")));
    }
    let q = other_point_on(t, p)?;
    let pt: [TruncatedSeries; 3] = std::array::from_fn(|i| {
        TruncatedSeries::from_coeffs(vec![p.coords()[i].clone(), q.coords()[i].clone()], order)
    });
    Ok(forms.iter().map(|f| f.eval_series(&pt)).collect())
}

/// Checks `ℙ_ℓ(s) = ∅` for `ℓ < k` and that no curve of `ℙ_k(s)` meets the curve at `P`
/// with multiplicity above `k(k+3)/2 - δ`. Without a curve, multiplicity is measured
/// on the tangent line `T` by restriction.
pub fn check_hypothesis_star(cfg: &NodalConfiguration) -> Result<HypothesisStarReport> {
    let delta = cfg.nodes.len() as u64;
    let k = k_of(delta);
    let bound = k * (k + 3) / 2 - delta;
    let empties_verified: Vec<(u64, bool)> = (0..k)
        .map(|l| (l, through_points(l as u32, &cfg.nodes).is_empty()))
        .collect();
    let sys = through_points(k as u32, &cfg.nodes);

    let (series, order, method) = match &cfg.curve {
        Some(c) => {
            // Bezout caps finite contact of a degree-k curve at k·d
            let order = (k * cfg.d as u64 + 2) as usize;
            let branch = branch_parametrization(c, &cfg.p, order)?;
            (branch.pullback_all(&sys.basis), order, "branch")
        }
        None => {
            let order = k as usize + 2;
            (
                line_expansions(&cfg.t, &cfg.p, &sys.basis, order)?,
                order,
                "line",
            )
        }
    };
    let (pivots, deficit) = attained_orders(&series, order);
    let max_found = if deficit > 0 {
        order as u64
    } else {
        pivots.last().map_or(0, |&v| v as u64)
    };
    let multiplicity_bound_verified = deficit == 0 && max_found <= bound;
    let holds = empties_verified.iter().all(|&(_, e)| e) && multiplicity_bound_verified;
    Ok(HypothesisStarReport {
        k,
        empties_verified,
        multiplicity_bound: bound,
        multiplicity_bound_verified,
        max_multiplicity_found: max_found,
        method: method.into(),
        holds,
    })
}
