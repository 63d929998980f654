//! Local and global geometry of plane curves at exact rational points.

mod audit;
mod branch;
mod point;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{Rational, TernaryForm, Valuation};

pub use audit::{
    singular_locus_audit, singular_locus_audit_with, SingularAuditReport, AUDIT_ENTRY_BOUND,
};
pub use branch::{branch_parametrization, BranchParametrization, MAX_SERIES_ORDER};
pub use point::ProjectivePoint;

/// A plane curve given by a nonzero form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TernaryForm", into = "TernaryForm")]
pub struct PlaneCurve {
    form: TernaryForm,
}

impl PlaneCurve {
    pub fn new(form: TernaryForm) -> Result<Self> {
        if form.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if form.degree() == 0 {
            return Err(Error::InvalidArgument(
                "a curve needs positive degree".into(),
            ));
        }
        Ok(Self { form })
    }

    pub fn form(&self) -> &TernaryForm {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.form.degree()
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        p.is_on(&self.form)
    }

    pub fn gradient_at(&self, p: &ProjectivePoint) -> [Rational; 3] {
        self.form.gradient().map(|g| g.eval(p.coords()))
    }

    pub fn is_smooth_at(&self, p: &ProjectivePoint) -> bool {
        self.contains(p) && self.gradient_at(p).iter().any(|c| !c.is_zero())
    }

    fn require_on(&self, p: &ProjectivePoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::PointNotOnCurve(p.to_string()))
        }
    }
}

impl TryFrom<TernaryForm> for PlaneCurve {
    type Error = Error;
    fn try_from(f: TernaryForm) -> Result<Self> {
        Self::new(f)
    }
}

impl From<PlaneCurve> for TernaryForm {
    fn from(c: PlaneCurve) -> TernaryForm {
        c.form
    }
}

/// Series truncation used for canonical-adjoint multiplicities at degree `d`.
pub fn default_order(d: u32) -> usize {
    (d.saturating_sub(3) * d + 2) as usize
}

/// A double point with two distinct tangents: the gradient vanishes and the
/// Hessian of the equation in the point's affine chart is nondegenerate.
pub fn is_ordinary_node(c: &PlaneCurve, p: &ProjectivePoint) -> Result<bool> {
    c.require_on(p)?;
    if c.gradient_at(p).iter().any(|g| !g.is_zero()) {
        return Ok(false);
    }
    let chart = p.chart();
    let (i, j) = match chart {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let second = |a: usize, b: usize| c.form.partial(a).partial(b).eval(p.coords());
    let det = second(i, i) * second(j, j) - second(i, j) * second(i, j);
    Ok(!det.is_zero())
}

/// The tangent line `F_x(p) x + F_y(p) y + F_z(p) z` at a smooth point.
pub fn tangent_line(c: &PlaneCurve, p: &ProjectivePoint) -> Result<TernaryForm> {
    c.require_on(p)?;
    let [a, b, cc] = c.gradient_at(p);
    if a.is_zero() && b.is_zero() && cc.is_zero() {
        return Err(Error::SingularPoint(p.to_string()));
    }
    Ok(TernaryForm::linear(a, b, cc).primitive())
}

/// Order of contact of `gamma` with the branch of `c` at the smooth point `p`,
/// or `AtLeast(order)` when the pullback vanishes to the truncation order.
pub fn intersection_multiplicity(
    c: &PlaneCurve,
    gamma: &TernaryForm,
    p: &ProjectivePoint,
    order: usize,
) -> Result<Valuation> {
    if gamma.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let branch = branch_parametrization(c, p, order)?;
    Ok(branch.pullback(gamma).valuation())
}

/// `e = i(Γ, T; P)` for the tangent `T` at `P`; `P` is a total inflection point iff `e = d`.
pub fn inflection_order(c: &PlaneCurve, p: &ProjectivePoint) -> Result<usize> {
    let t = tangent_line(c, p)?;
    let order = c.degree() as usize + 1;
    match intersection_multiplicity(c, &t, p, order)? {
        Valuation::Exact(e) => Ok(e),
        Valuation::AtLeast(_) => Err(Error::TangentIsComponent),
    }
}
