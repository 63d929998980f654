//! Images of rational polynomials modulo word-size primes, used to certify
//! coprimality without running a full gcd over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::rational::primitive_integer_vector;
use super::unipoly::UniPoly;

/// Primes just below `2^61`.
const PRIMES: [u64; 8] = [
    2305843009213693951,
    2305843009213693921,
    2305843009213693907,
    2305843009213693723,
    2305843009213693693,
    2305843009213693669,
    2305843009213693613,
    2305843009213693561,
];

fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn reduce(ints: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    trim(
        ints.iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
            .collect(),
    )
}

/// Monic remainder of `a` by `b` over `F_p`; `b` nonempty with nonzero leading term.
fn rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let lb_inv = inv(b[db], p);
    while a.len() > db && !a.is_empty() {
        let f = mul(*a.last().expect("nonempty"), lb_inv, p);
        let shift = a.len() - 1 - db;
        for (j, bj) in b.iter().enumerate() {
            a[shift + j] = (a[shift + j] + p - mul(f, *bj, p)) % p;
        }
        a = trim(a);
    }
    a
}

fn gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let r = rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn derivative(a: &[u64], p: u64) -> Vec<u64> {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| mul(i as u64 % p, *c, p))
            .collect(),
    )
}

/// Degree of the gcd of `polys` modulo `p`, and its number of distinct roots
/// over the algebraic closure, or `None` if `p` divides the leading coefficient
/// of the first polynomial (a bad prime).
fn gcd_image(ints: &[Vec<BigInt>], p: u64) -> Option<(usize, usize)> {
    let first = ints.first()?;
    let lead = first.last()?;
    if (lead % BigInt::from(p)).is_zero() {
        return None;
    }
    let mut g = reduce(first, p);
    for f in &ints[1..] {
        g = gcd(g, reduce(f, p), p);
    }
    let deg = g.len().checked_sub(1)?;
    let repeated = gcd(g.clone(), derivative(&g, p), p).len().saturating_sub(1);
    Some((deg, deg - repeated))
}

fn integer_images(polys: &[UniPoly]) -> Vec<Vec<BigInt>> {
    polys
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| primitive_integer_vector(f.coeffs()))
        .collect()
}

/// Proves that the nonzero polynomials in `polys` have no common root: a prime
/// not dividing the leading coefficient of the first one keeps the degree of
/// the rational gcd, so a constant gcd modulo that prime is a certificate.
/// Returns the certifying prime, or `None` if no listed prime certifies.
pub fn coprime_certificate(polys: &[UniPoly]) -> Option<u64> {
    let ints = integer_images(polys);
    if ints.is_empty() {
        return None;
    }
    PRIMES
        .iter()
        .copied()
        .find(|&p| matches!(gcd_image(&ints, p), Some((0, _))))
}

/// Distinct common roots of `polys` as seen modulo the listed primes (the
/// minimum over good primes). An upper bound on the true count, and equal to
/// it for all but finitely many primes.
pub fn common_root_estimate(polys: &[UniPoly]) -> usize {
    let ints = integer_images(polys);
    PRIMES
        .iter()
        .filter_map(|&p| gcd_image(&ints, p))
        .map(|(_, distinct)| distinct)
        .min()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certifies_coprime_pair() {
        let f = UniPoly::from_i64(&[-2, 0, 1]);
        let g = UniPoly::from_i64(&[-3, 0, 1]);
        assert!(coprime_certificate(&[f.clone(), g]).is_some());
        let h = &f * &UniPoly::from_i64(&[5, 1]);
        assert!(coprime_certificate(&[f.clone(), h.clone()]).is_none());
        assert_eq!(common_root_estimate(&[f, h]), 2);
    }

    #[test]
    fn counts_distinct_roots() {
        let a = UniPoly::from_i64(&[1, 1]);
        let b = UniPoly::from_i64(&[-7, 1]);
        let sq = &(&a * &a) * &b;
        let other = &(&a * &b) * &UniPoly::from_i64(&[11, 3]);
        assert_eq!(common_root_estimate(&[sq, other]), 2);
    }
}
