//! Strategies shared by the integration tests.
#![allow(dead_code)]

use nodalgaps::curvegeom::{PlaneCurve, ProjectivePoint};
use nodalgaps::exactmath::{q, Rational, TernaryForm};
use proptest::prelude::*;

pub fn origin() -> ProjectivePoint {
    ProjectivePoint::from_i64(0, 0, 1)
}

pub fn dense(degree: u32) -> impl Strategy<Value = Vec<Rational>> {
    let n = ((degree + 1) * (degree + 2) / 2) as usize;
    prop::collection::vec((-5i64..=5).prop_map(q), n)
}

/// `y·G + c·x^d` with `G(0,0,1) ≠ 0`: total inflection at the origin with tangent `y`.
pub fn flex_curve(d: u32) -> impl Strategy<Value = PlaneCurve> {
    (dense(d - 1), prop_oneof![-3i64..=-1, 1i64..=3], 1i64..=4).prop_map(move |(g, c, g0)| {
        let g = TernaryForm::from_dense(d - 1, &g);
        let top = [0, 0, d - 1];
        let z_top = TernaryForm::from_i64_terms(d - 1, &[(top, 1)]).unwrap();
        // pin the z^(d-1) coefficient of G to g0
        let g = &g + &z_top.scale(&(q(g0) - g.coeff(&top)));
        let y = TernaryForm::linear_i64(0, 1, 0);
        let xd = TernaryForm::from_i64_terms(d, &[([d, 0, 0], c)]).unwrap();
        PlaneCurve::new(&(&y * &g) + &xd).unwrap()
    })
}

/// A curve through the origin, smooth there.
pub fn curve_through_origin(d: u32) -> impl Strategy<Value = PlaneCurve> {
    dense(d)
        .prop_map(move |c| {
            let mut f = TernaryForm::from_dense(d, &c);
            let zd = TernaryForm::from_i64_terms(d, &[([0, 0, d], 1)]).unwrap();
            f = &f - &zd.scale(&f.coeff(&[0, 0, d]));
            f
        })
        .prop_filter_map("smooth at origin", |f| {
            let c = PlaneCurve::new(f).ok()?;
            c.is_smooth_at(&origin()).then_some(c)
        })
}
