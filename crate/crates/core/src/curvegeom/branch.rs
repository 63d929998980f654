//! Power-series parametrization of a curve at a smooth point.

use num_traits::{One, Zero};
use serde::Serialize;

use super::{PlaneCurve, ProjectivePoint};
use crate::error::{Error, Result};
use crate::exactmath::{Rational, TernaryForm, TruncatedSeries, Valuation};

/// Largest truncation order accepted for branch expansions.
pub const MAX_SERIES_ORDER: usize = 1024;

/// The curve near `center`, written as `center + u·along + s(u)·across` with
/// `along` a second point of the tangent line and `across` off it.
#[derive(Debug, Clone, Serialize)]
pub struct BranchParametrization {
    pub center: ProjectivePoint,
    #[serde(serialize_with = "ser_vec")]
    pub along: [Rational; 3],
    #[serde(serialize_with = "ser_vec")]
    pub across: [Rational; 3],
    pub tangent_form: TernaryForm,
    #[serde(serialize_with = "ser_series")]
    pub series: TruncatedSeries,
}

fn ser_vec<S: serde::Serializer>(v: &[Rational; 3], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::Serialize;
    v.iter()
        .map(crate::exactmath::format_rational)
        .collect::<Vec<_>>()
        .serialize(s)
}

fn ser_series<S: serde::Serializer>(
    v: &TruncatedSeries,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::Serialize;
    v.coeffs()
        .iter()
        .map(crate::exactmath::format_rational)
        .collect::<Vec<_>>()
        .serialize(s)
}

fn unit(i: usize) -> [Rational; 3] {
    let mut e = [Rational::zero(), Rational::zero(), Rational::zero()];
    e[i] = Rational::one();
    e
}

fn dot(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn proportional(a: &[Rational; 3], b: &[Rational; 3]) -> bool {
    (&a[1] * &b[2] - &a[2] * &b[1]).is_zero()
        && (&a[2] * &b[0] - &a[0] * &b[2]).is_zero()
        && (&a[0] * &b[1] - &a[1] * &b[0]).is_zero()
}

/// Frame adapted to the tangent line `t` at `p`: a second point on `t` and a point off it.
/// Coordinate vectors are preferred so that already adapted equations are left alone.
fn adapted_frame(p: &[Rational; 3], t: &[Rational; 3]) -> ([Rational; 3], [Rational; 3]) {
    let along = (0..3)
        .map(unit)
        .find(|e| dot(t, e).is_zero() && !proportional(e, p))
        .unwrap_or_else(|| {
            [
                &t[1] * &p[2] - &t[2] * &p[1],
                &t[2] * &p[0] - &t[0] * &p[2],
                &t[0] * &p[1] - &t[1] * &p[0],
            ]
        });
    let across = (0..3)
        .map(unit)
        .find(|e| !dot(t, e).is_zero())
        .expect("nonzero tangent");
    (along, across)
}

impl BranchParametrization {
    /// Coordinates of the branch point as series in `u`, truncated at `order`.
    pub fn point_series(&self, order: usize) -> [TruncatedSeries; 3] {
        let s = self.series.truncate(order);
        std::array::from_fn(|i| {
            let mut lin = TruncatedSeries::from_coeffs(
                vec![self.center.coords()[i].clone(), self.along[i].clone()],
                order,
            );
            lin = &lin + &s.scale(&self.across[i]);
            lin
        })
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// Pulls `form` back along the branch, truncated at the series order.
    pub fn pullback(&self, form: &TernaryForm) -> TruncatedSeries {
        form.eval_series(&self.point_series(self.order()))
    }

    /// Pulls back several forms of one degree, sharing the coordinate powers.
    pub fn pullback_all(&self, forms: &[TernaryForm]) -> Vec<TruncatedSeries> {
        let order = self.order();
        let deg = forms.iter().map(TernaryForm::degree).max().unwrap_or(0) as usize;
        let pt = self.point_series(order);
        let powers = [pt[0].powers(deg), pt[1].powers(deg), pt[2].powers(deg)];
        forms
            .iter()
            .map(|f| f.eval_series_powers(&powers, order))
            .collect()
    }

    /// Valuation of the curve equation along the branch (should be `AtLeast(order)`).
    pub fn residual(&self, curve: &PlaneCurve) -> Valuation {
        self.pullback(curve.form()).valuation()
    }
}

/// Expands the branch at the smooth point `p` to the given order by Newton lifting.
pub fn branch_parametrization(
    c: &PlaneCurve,
    p: &ProjectivePoint,
    order: usize,
) -> Result<BranchParametrization> {
    if order > MAX_SERIES_ORDER {
        return Err(Error::OrderCeiling {
            requested: order,
            ceiling: MAX_SERIES_ORDER,
        });
    }
    let tangent = super::tangent_line(c, p)?;
    let t = tangent.linear_coeffs().expect("degree-1 tangent");
    let (along, across) = adapted_frame(p.coords(), &t);
    let f = c.form();
    // derivative of F in the transverse direction
    let grad = f.gradient();
    let mut transverse = TernaryForm::zero(f.degree().saturating_sub(1));
    for (g, b) in grad.iter().zip(&across) {
        transverse = &transverse + &g.scale(b);
    }

    let mut branch = BranchParametrization {
        center: p.clone(),
        along,
        across,
        tangent_form: tangent,
        series: TruncatedSeries::zero(order),
    };
    let mut known = 1.min(order);
    while known < order {
        let next = (2 * known).min(order);
        let pt = branch.point_series(next);
        let value = f.eval_series(&pt);
        let slope = transverse.eval_series(&pt).inverse()?;
        let correction = &value * &slope;
        branch.series = &branch.series.truncate(next) - &correction;
        known = next;
    }
    branch.series = TruncatedSeries::from_coeffs(branch.series.coeffs().to_vec(), order);
    Ok(branch)
}
