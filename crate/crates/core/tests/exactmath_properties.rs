use nodalgaps::exactmath::{
    exact_rank, format_rational, parse_rational, q, q_frac, resultant, univariate_gcd, ExactMatrix,
    Rational, TernaryForm, UniPoly,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| q_frac(n, d))
}

fn matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        // small entries make rank deficiency common enough to matter
        prop::collection::vec(prop::collection::vec((-2i64..=2).prop_map(q), c), r)
            .prop_map(|rows| ExactMatrix::from_rows(rows).unwrap())
    })
}

fn unipoly(max_degree: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_degree + 1)
        .prop_map(|c| UniPoly::from_i64(&c))
        .prop_filter("nonconstant", |p| p.degree().is_some_and(|d| d >= 1))
}

fn form(degree: u32) -> impl Strategy<Value = TernaryForm> {
    let n = ((degree + 1) * (degree + 2) / 2) as usize;
    prop::collection::vec((-4i64..=4).prop_map(q), n)
        .prop_map(move |c| TernaryForm::from_dense(degree, &c))
        .prop_filter("nonzero", |f| !f.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * a.recip()).is_one());
        }
        prop_assert!(a.denom() > &0.into());
    }

    #[test]
    fn rational_text_round_trip(a in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
    }

    #[test]
    fn rank_is_transpose_invariant(m in matrix()) {
        prop_assert_eq!(exact_rank(&m), exact_rank(&m.transpose()));
        prop_assert!(exact_rank(&m) <= m.rows().min(m.cols()));
    }

    #[test]
    fn kernel_has_complementary_dimension(m in matrix()) {
        let kernel = m.kernel();
        prop_assert_eq!(kernel.len() + exact_rank(&m), m.cols());
        for v in &kernel {
            for i in 0..m.rows() {
                let dot: Rational = m.row(i).iter().zip(v).map(|(a, b)| a * b).sum();
                prop_assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(
        f in unipoly(3),
        g in unipoly(3),
        common in prop::option::of(unipoly(1)),
    ) {
        let (f, g) = match &common {
            Some(h) => (&f * h, &g * h),
            None => (f, g),
        };
        let r = resultant(&f, &g).unwrap();
        let h = univariate_gcd(&f, &g).unwrap();
        prop_assert_eq!(r.is_zero(), h.degree().unwrap_or(0) > 0);
        if common.is_some() {
            prop_assert!(r.is_zero());
        }
    }

    #[test]
    fn division_recovers_cofactor(gamma in form(3), a in -5i64..=5, b in -5i64..=5, c in 1i64..=5) {
        let line = TernaryForm::linear_i64(a, b, c);
        let product = &gamma * &line;
        prop_assert!(product.is_divisible_by(&line));
        prop_assert_eq!(product.div_exact(&line).unwrap(), gamma);
    }
}

#[test]
fn determinant_agrees_with_rank() {
    let m = ExactMatrix::from_rows(vec![
        vec![q(2), q(1), q(0)],
        vec![q(4), q(2), q(0)],
        vec![q(1), q(1), q(1)],
    ])
    .unwrap();
    assert_eq!(exact_rank(&m), 2);
    assert!(m.determinant().unwrap().is_zero());
    assert_eq!(
        ExactMatrix::identity(4).determinant().unwrap(),
        Rational::one()
    );
}
