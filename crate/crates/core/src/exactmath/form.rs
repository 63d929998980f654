//! Homogeneous ternary forms in `x, y, z`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, serde_rational, Rational};
use super::series::TruncatedSeries;
use crate::error::{Error, Result};

/// Exponent triple `(i, j, k)` of `x^i y^j z^k`.
pub type Exponent = [u32; 3];

/// Sparse homogeneous form. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    degree: u32,
    terms: BTreeMap<Exponent, Rational>,
}

/// All exponent triples of the given degree, in a fixed order.
pub fn monomials(degree: u32) -> Vec<Exponent> {
    let mut out = Vec::with_capacity(((degree + 1) * (degree + 2) / 2) as usize);
    for i in (0..=degree).rev() {
        for j in (0..=degree - i).rev() {
            out.push([i, j, degree - i - j]);
        }
    }
    out
}

/// Value of `x^i y^j z^k` at a coordinate vector.
pub fn eval_monomial(e: &Exponent, p: &[Rational; 3]) -> Rational {
    let mut v = Rational::one();
    for (c, &n) in p.iter().zip(e) {
        for _ in 0..n {
            v *= c;
        }
    }
    v
}

impl TernaryForm {
    pub fn zero(degree: u32) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms(0, [([0, 0, 0], c)]).expect("degree-0 term")
    }

    /// Builds a form, rejecting exponents of the wrong degree and summing repeats.
    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (Exponent, Rational)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(Error::InvalidArgument(format!(
                    "exponent {e:?} in a form of degree {degree}"
                )));
            }
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self { degree, terms: map })
    }

    pub fn from_i64_terms(degree: u32, terms: &[(Exponent, i64)]) -> Result<Self> {
        Self::from_terms(
            degree,
            terms
                .iter()
                .map(|&(e, c)| (e, Rational::from_integer(c.into()))),
        )
    }

    /// `a x + b y + c z`
    pub fn linear(a: Rational, b: Rational, c: Rational) -> Self {
        Self::from_terms(1, [([1, 0, 0], a), ([0, 1, 0], b), ([0, 0, 1], c)]).expect("degree 1")
    }

    pub fn linear_i64(a: i64, b: i64, c: i64) -> Self {
        Self::linear(a.into_q(), b.into_q(), c.into_q())
    }

    /// Coefficient vector of a degree-1 form.
    pub fn linear_coeffs(&self) -> Option<[Rational; 3]> {
        (self.degree == 1).then(|| {
            [
                self.coeff(&[1, 0, 0]),
                self.coeff(&[0, 1, 0]),
                self.coeff(&[0, 0, 1]),
            ]
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients in the order of [`monomials`].
    pub fn dense_coeffs(&self) -> Vec<Rational> {
        monomials(self.degree)
            .iter()
            .map(|e| self.coeff(e))
            .collect()
    }

    pub fn from_dense(degree: u32, coeffs: &[Rational]) -> Self {
        Self::from_terms(
            degree,
            monomials(degree).into_iter().zip(coeffs.iter().cloned()),
        )
        .expect("monomials of matching degree")
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(Rational::one());
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, p: &[Rational; 3]) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| c * eval_monomial(e, p))
            .sum()
    }

    /// Partial derivative with respect to coordinate `var` (0 = x, 1 = y, 2 = z).
    pub fn partial(&self, var: usize) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        let terms = self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
            let mut e2 = *e;
            e2[var] -= 1;
            (e2, c * Rational::from_integer(BigInt::from(e[var])))
        });
        Self::from_terms(self.degree - 1, terms).expect("degree drops by one")
    }

    pub fn gradient(&self) -> [Self; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    /// `G(X) = F(M X)`: substitutes `x_r = sum_c M[r][c] X_c`.
    pub fn compose_linear(&self, m: &[[Rational; 3]; 3]) -> Self {
        let subs: Vec<Self> = m
            .iter()
            .map(|r| Self::linear(r[0].clone(), r[1].clone(), r[2].clone()))
            .collect();
        let powers: Vec<Vec<Self>> = subs
            .iter()
            .map(|l| {
                let mut v = vec![Self::constant(Rational::one())];
                for i in 1..=self.degree {
                    let next = &v[i as usize - 1] * l;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Self::zero(self.degree);
        for (e, c) in &self.terms {
            let t = &(&powers[0][e[0] as usize] * &powers[1][e[1] as usize])
                * &powers[2][e[2] as usize];
            out = &out + &t.scale(c);
        }
        out
    }

    /// Evaluates at a point whose coordinates are series, given precomputed powers
    /// of each coordinate (at least up to the degree of the form).
    pub fn eval_series_powers(
        &self,
        powers: &[Vec<TruncatedSeries>; 3],
        order: usize,
    ) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(order);
        for (e, c) in &self.terms {
            let t = &(&powers[0][e[0] as usize] * &powers[1][e[1] as usize])
                * &powers[2][e[2] as usize];
            out = &out + &t.scale(c);
        }
        out
    }

    pub fn eval_series(&self, point: &[TruncatedSeries; 3]) -> TruncatedSeries {
        let order = point.iter().map(TruncatedSeries::order).min().unwrap_or(0);
        let powers = [
            point[0].powers(self.degree as usize),
            point[1].powers(self.degree as usize),
            point[2].powers(self.degree as usize),
        ];
        self.eval_series_powers(&powers, order)
    }

    fn leading(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lt_e, lt_c) = divisor.leading()?;
        if self.is_zero() {
            return self.degree.checked_sub(divisor.degree).map(Self::zero);
        }
        let qdeg = self.degree.checked_sub(divisor.degree)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(qdeg);
        while let Some((re, rc)) = rem.leading() {
            if (0..3).any(|i| re[i] < lt_e[i]) {
                return None;
            }
            let qe = [re[0] - lt_e[0], re[1] - lt_e[1], re[2] - lt_e[2]];
            let qc = rc / lt_c;
            let term = Self::from_terms(qdeg, [(qe, qc)]).expect("quotient degree");
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Some(quot)
    }

    pub fn is_divisible_by(&self, divisor: &Self) -> bool {
        self.div_exact(divisor).is_some()
    }

    /// Scales to a primitive integer form with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        let coeffs: Vec<Rational> = self.terms.values().rev().cloned().collect();
        let ints = super::rational::primitive_integer_vector(&coeffs);
        Self {
            degree: self.degree,
            terms: self
                .terms
                .keys()
                .rev()
                .zip(ints)
                .map(|(e, c)| (*e, Rational::from_integer(c)))
                .collect(),
        }
    }

    /// Whether the two forms agree up to a nonzero scalar.
    pub fn proportional(&self, other: &Self) -> bool {
        if self.degree != other.degree || self.is_zero() || other.is_zero() {
            return self.degree == other.degree && self.is_zero() && other.is_zero();
        }
        self.primitive() == other.primitive()
    }
}

trait IntoQ {
    fn into_q(self) -> Rational;
}

impl IntoQ for i64 {
    fn into_q(self) -> Rational {
        Rational::from_integer(self.into())
    }
}

impl Add for &TernaryForm {
    type Output = TernaryForm;
    fn add(self, rhs: &TernaryForm) -> TernaryForm {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            *terms.entry(*e).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        TernaryForm {
            degree: self.degree,
            terms,
        }
    }
}

impl Neg for &TernaryForm {
    type Output = TernaryForm;
    fn neg(self) -> TernaryForm {
        TernaryForm {
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &TernaryForm {
    type Output = TernaryForm;
    fn sub(self, rhs: &TernaryForm) -> TernaryForm {
        self + &(-rhs)
    }
}

impl Mul for &TernaryForm {
    type Output = TernaryForm;
    fn mul(self, rhs: &TernaryForm) -> TernaryForm {
        let mut terms: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                *terms.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        TernaryForm {
            degree: self.degree + rhs.degree,
            terms,
        }
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", format_rational(c))?;
            for (v, n) in ["x", "y", "z"].iter().zip(e) {
                match n {
                    0 => {}
                    1 => write!(f, "{v}")?,
                    _ => write!(f, "{v}^{n}")?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    i: u32,
    j: u32,
    k: u32,
    #[serde(with = "serde_rational")]
    c: Rational,
}

#[derive(Serialize, Deserialize)]
struct FormRepr {
    degree: u32,
    terms: Vec<TermRepr>,
}

impl Serialize for TernaryForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FormRepr {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    i: e[0],
                    j: e[1],
                    k: e[2],
                    c: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TernaryForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = FormRepr::deserialize(d)?;
        TernaryForm::from_terms(
            repr.degree,
            repr.terms.into_iter().map(|t| ([t.i, t.j, t.k], t.c)),
        )
        .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::q;

    #[test]
    fn monomial_count() {
        assert_eq!(monomials(2).len(), 6);
        assert_eq!(monomials(7).len(), 36);
        assert_eq!(monomials(0), vec![[0, 0, 0]]);
    }

    #[test]
    fn rejects_bad_exponents() {
        assert!(TernaryForm::from_i64_terms(2, &[([1, 0, 0], 1)]).is_err());
    }

    #[test]
    fn zero_coefficients_dropped() {
        let f = TernaryForm::from_i64_terms(1, &[([1, 0, 0], 1), ([1, 0, 0], -1)]).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.num_terms(), 0);
    }

    #[test]
    fn division_by_line() {
        let l = TernaryForm::linear_i64(1, -2, 3);
        let g = TernaryForm::from_i64_terms(2, &[([2, 0, 0], 1), ([0, 1, 1], 5), ([0, 0, 2], -1)])
            .unwrap();
        let prod = &l * &g;
        assert_eq!(prod.div_exact(&l).unwrap(), g);
        assert!(g.div_exact(&l).is_none());
    }

    #[test]
    fn json_shape() {
        let f = TernaryForm::from_terms(
            1,
            [
                ([0, 1, 0], q(1)),
                ([1, 0, 0], Rational::new(3.into(), 2.into())),
            ],
        )
        .unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"degree":1,"terms":[{"i":0,"j":1,"k":0,"c":"1"},{"i":1,"j":0,"k":0,"c":"3/2"}]}"#
        );
        let back: TernaryForm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn compose_identity_is_noop() {
        let f = TernaryForm::from_i64_terms(3, &[([3, 0, 0], 2), ([0, 1, 2], -1), ([1, 1, 1], 4)])
            .unwrap();
        let id = [[q(1), q(0), q(0)], [q(0), q(1), q(0)], [q(0), q(0), q(1)]];
        assert_eq!(f.compose_linear(&id), f);
    }
}
