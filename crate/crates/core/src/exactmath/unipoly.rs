//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::ExactMatrix;
use super::rational::{format_rational, primitive_integer_vector, Rational};
use crate::error::{Error, Result};

/// Coefficient `i` multiplies `x^i`. No trailing zeros are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`
    pub fn linear_root(root: Rational) -> Self {
        Self::new(vec![-root, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let v = &rem[i + j] - &c * dc;
                rem[i + j] = v;
            }
            quot[i] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidArgument(
                "polynomial division is not exact".into(),
            ));
        }
        Ok(q)
    }

    /// Integer primitive part with positive leading coefficient.
    fn primitive(&self) -> Vec<BigInt> {
        let mut v = primitive_integer_vector(&self.coeffs);
        if v.last().is_some_and(Signed::is_negative) {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
        v
    }
}

fn from_ints(v: &[BigInt]) -> UniPoly {
    UniPoly::new(
        v.iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect(),
    )
}

/// Pseudo-remainder of integer polynomials, `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x = &*x * lb;
        }
        for (j, bj) in b.iter().enumerate() {
            let v = &r[shift + j] - &lr * bj;
            r[shift + j] = v;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

fn primitive_ints(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// Monic gcd via the primitive remainder sequence over the integers.
pub fn univariate_gcd(f: &UniPoly, g: &UniPoly) -> Result<UniPoly> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::ZeroPolynomial),
        (true, false) => return Ok(g.monic()),
        (false, true) => return Ok(f.monic()),
        _ => {}
    }
    let (mut a, mut b) = (f.primitive(), g.primitive());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive_ints(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    Ok(from_ints(&a).monic())
}

/// `f / gcd(f, f')`, monic.
pub fn squarefree_part(f: &UniPoly) -> Result<UniPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = univariate_gcd(f, &f.derivative())?;
    Ok(f.div_exact(&g)?.monic())
}

/// Determinant of the Sylvester matrix built from formal coefficient lists
/// (index = exponent, the last entry is the formal leading coefficient and may vanish).
pub fn sylvester_resultant(f: &[Rational], g: &[Rational]) -> Rational {
    let m = f.len().saturating_sub(1);
    let n = g.len().saturating_sub(1);
    if m + n == 0 {
        return Rational::one();
    }
    let size = m + n;
    let mut s = ExactMatrix::zeros(size, size);
    for i in 0..n {
        for (j, c) in f.iter().rev().enumerate() {
            s[(i, i + j)] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            s[(n + i, i + j)] = c.clone();
        }
    }
    s.determinant().expect("square Sylvester matrix")
}

/// Sylvester resultant of two univariate polynomials.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<Rational> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(Error::ZeroPolynomial),
        (true, false) | (false, true) => Ok(Rational::zero()),
        _ => Ok(sylvester_resultant(&f.coeffs, &g.coeffs)),
    }
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly {
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut p = UniPoly::zero();
    for i in (0..n).rev() {
        p = &(&p * &UniPoly::linear_root(xs[i].clone())) + &UniPoly::constant(dd[i].clone());
    }
    p
}

/// Resultant with respect to an inner variable `y` of two polynomials whose
/// coefficients (index = power of `y`) are polynomials in `x`. The lists give
/// formal degrees in `y`. `x_degree_bound` must bound the degree of the result.
pub fn resultant_in_x(f: &[UniPoly], g: &[UniPoly], x_degree_bound: usize) -> Result<UniPoly> {
    if f.iter().all(UniPoly::is_zero) && g.iter().all(UniPoly::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let xs: Vec<Rational> = (0..=x_degree_bound as i64)
        .map(|i| Rational::from_integer(i.into()))
        .collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| {
            let fx: Vec<Rational> = f.iter().map(|c| c.eval(x)).collect();
            let gx: Vec<Rational> = g.iter().map(|c| c.eval(x)).collect();
            sylvester_resultant(&fx, &gx)
        })
        .collect();
    Ok(interpolate(&xs, &ys))
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format_rational(c),
                1 => format!("({})x", format_rational(c)),
                _ => format!("({})x^{i}", format_rational(c)),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
