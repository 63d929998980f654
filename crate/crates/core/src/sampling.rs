//! Seeded sampling of small rational data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curvegeom::ProjectivePoint;
use crate::exactmath::{q, Rational, TernaryForm};

/// Height bound for sampled coordinates and coefficients.
pub const HEIGHT: i64 = 100;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mixes a stage label into a seed so independent stages draw independent streams.
pub fn derive_seed(seed: u64, stage: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(stage.wrapping_mul(0xD1B5_4A32_D192_ED03))
}

pub fn int(rng: &mut impl Rng, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

pub fn nonzero_int(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let v = int(rng, bound);
        if v != 0 {
            return v;
        }
    }
}

/// Affine point `(x : y : 1)` with small integer coordinates.
pub fn affine_point(rng: &mut impl Rng) -> ProjectivePoint {
    ProjectivePoint::from_i64(int(rng, HEIGHT / 4), int(rng, HEIGHT / 4), 1)
}

/// Line with integer coefficients, not the line at infinity.
pub fn line(rng: &mut impl Rng) -> TernaryForm {
    loop {
        let (a, b, c) = (int(rng, HEIGHT), int(rng, HEIGHT), int(rng, HEIGHT));
        if a != 0 || b != 0 {
            return TernaryForm::linear_i64(a, b, c);
        }
    }
}

/// Random line through `p`.
pub fn line_through(rng: &mut impl Rng, p: &ProjectivePoint) -> TernaryForm {
    loop {
        let other = affine_point(rng);
        if other != *p {
            return p.line_to(&other);
        }
    }
}

/// Random rational point on the line `l` other than the excluded ones.
pub fn point_on_line(
    rng: &mut impl Rng,
    l: &TernaryForm,
    exclude: &[ProjectivePoint],
) -> ProjectivePoint {
    loop {
        let other = line(rng);
        if let Some(p) = ProjectivePoint::meet(l, &other) {
            if !p.coords()[2].eq(&q(0)) && !exclude.contains(&p) {
                return p;
            }
        }
    }
}

/// Dense random form of the given degree with small integer coefficients.
pub fn form(rng: &mut impl Rng, degree: u32) -> TernaryForm {
    let coeffs: Vec<Rational> = crate::exactmath::monomials(degree)
        .iter()
        .map(|_| q(int(rng, HEIGHT)))
        .collect();
    TernaryForm::from_dense(degree, &coeffs)
}
