use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::{format_rational, parse_rational, q, ExactMatrix, Rational, TernaryForm};

/// Point of the projective plane, normalized so that its last nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: [Rational; 3],
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

impl ProjectivePoint {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Result<Self> {
        let mut coords = [x, y, z];
        let Some(last) = coords.iter().rposition(|c| !c.is_zero()) else {
            return Err(Error::InvalidArgument(
                "the zero vector is not a projective point".into(),
            ));
        };
        let s = coords[last].recip();
        for c in coords.iter_mut() {
            *c = &*c * &s;
        }
        Ok(Self { coords })
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Self {
        Self::new(q(x), q(y), q(z)).expect("nonzero integer point")
    }

    pub fn from_coords(c: [Rational; 3]) -> Result<Self> {
        let [x, y, z] = c;
        Self::new(x, y, z)
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }

    /// Index of the coordinate normalized to 1.
    pub fn chart(&self) -> usize {
        self.coords
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("nonzero point")
    }

    pub fn is_on(&self, f: &TernaryForm) -> bool {
        f.eval(&self.coords).is_zero()
    }

    /// The line through two distinct points.
    pub fn line_to(&self, other: &Self) -> TernaryForm {
        let [a, b, c] = cross(&self.coords, &other.coords);
        TernaryForm::linear(a, b, c).primitive()
    }

    /// Intersection of two distinct lines.
    pub fn meet(l1: &TernaryForm, l2: &TernaryForm) -> Option<Self> {
        let (a, b) = (l1.linear_coeffs()?, l2.linear_coeffs()?);
        Self::from_coords(cross(&a, &b)).ok()
    }

    pub fn collinear(a: &Self, b: &Self, c: &Self) -> bool {
        let m = ExactMatrix::from_rows(vec![
            a.coords.to_vec(),
            b.coords.to_vec(),
            c.coords.to_vec(),
        ])
        .expect("3x3");
        m.determinant().expect("square").is_zero()
    }

    /// Image under `X ↦ M X`.
    pub fn transform(&self, m: &[[Rational; 3]; 3]) -> Result<Self> {
        let v: Vec<Rational> = m
            .iter()
            .map(|row| row.iter().zip(&self.coords).map(|(a, b)| a * b).sum())
            .collect();
        Self::new(v[0].clone(), v[1].clone(), v[2].clone())
    }

    pub fn is_affine(&self) -> bool {
        self.coords[2].is_one()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.coords;
        write!(
            f,
            "({}:{}:{})",
            format_rational(x),
            format_rational(y),
            format_rational(z)
        )
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords.iter().map(format_rational).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = <[String; 3]>::deserialize(d)?;
        let c: Vec<Rational> = v
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<_>>()
            .map_err(serde::de::Error::custom)?;
        Self::new(c[0].clone(), c[1].clone(), c[2].clone()).map_err(serde::de::Error::custom)
    }
}
