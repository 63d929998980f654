//! Non-gap semigroups at total inflection points.
//!
//! Every set here is a cofinite subset of ℕ materialized as a bitset on
//! `[0, bound)`, where `bound = (d-2)(d-1) + d` lies past every conductor that
//! occurs for degree `d`.

mod table;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use table::{table_row, table_rows, RowCondition, TableRow, TableRowId, TABLE};

/// Cofinite subset of ℕ, stored up to an exclusive bound.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    bound: u64,
    bits: Vec<u64>,
}

impl NumericalSemigroup {
    /// Everything in `[0, bound)` satisfying `member`.
    pub fn from_predicate(bound: u64, member: impl Fn(u64) -> bool) -> Self {
        let mut s = Self {
            bound,
            bits: vec![0; bound.div_ceil(64) as usize],
        };
        for n in 0..bound {
            if member(n) {
                s.insert(n);
            }
        }
        s
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.bound || self.bits[(n / 64) as usize] >> (n % 64) & 1 == 1
    }

    fn insert(&mut self, n: u64) {
        self.bits[(n / 64) as usize] |= 1 << (n % 64);
    }

    /// Adds one element below the bound.
    pub(crate) fn adjoin(&mut self, n: u64) {
        debug_assert!(n < self.bound);
        self.insert(n);
    }

    /// Least `c` with `[c, bound) ⊆ self`.
    pub fn conductor(&self) -> u64 {
        (0..self.bound)
            .rev()
            .find(|&n| !self.contains(n))
            .map_or(0, |n| n + 1)
    }

    /// True iff the set is closed under addition. Sums at or past the bound are
    /// members automatically since the bound exceeds the conductor.
    pub fn is_semigroup(&self) -> bool {
        if !self.contains(0) {
            return false;
        }
        let members: Vec<u64> = (1..self.bound).filter(|&n| self.contains(n)).collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i..] {
                if a + b >= self.bound {
                    break;
                }
                if !self.contains(a + b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn gaps(&self) -> GapSequence {
        GapSequence((1..self.bound).filter(|&n| !self.contains(n)).collect())
    }

    pub fn nongaps_below_conductor(&self) -> Vec<u64> {
        (0..self.conductor())
            .filter(|&n| self.contains(n))
            .collect()
    }
}

/// Strictly increasing gaps `α_1 < … < α_g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GapSequence(pub Vec<u64>);

impl GapSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn contains(&self, n: u64) -> bool {
        self.0.binary_search(&n).is_ok()
    }
}

impl fmt::Display for GapSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn gaps(s: &NumericalSemigroup) -> GapSequence {
    s.gaps()
}

pub fn is_semigroup(s: &NumericalSemigroup) -> bool {
    s.is_semigroup()
}

/// `Σ (α_i − i)`.
pub fn weight(g: &GapSequence) -> u64 {
    g.0.iter()
        .enumerate()
        .map(|(i, &a)| a - (i as u64 + 1))
        .sum()
}

/// True iff `a_i ≥ b_i` for every `i`.
pub fn dominates(a: &GapSequence, b: &GapSequence) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument(format!(
            "gap sequences of different lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.0.iter().zip(&b.0).all(|(x, y)| x >= y))
}

/// `min{ℓ ∈ ℕ : δ ≤ ℓ(ℓ+3)/2}`
pub fn k_of(delta: u64) -> u64 {
    (0..)
        .find(|l| delta <= l * (l + 3) / 2)
        .expect("unbounded search")
}

/// `(d−1)(d−2)/2`, the genus of a smooth plane curve of degree `d`.
pub fn smooth_genus(d: u64) -> u64 {
    (d - 1) * (d - 2) / 2
}

pub fn semigroup_bound(d: u64) -> u64 {
    (d - 2) * (d - 1) + d
}

/// Degree and node count of a nodal plane curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub d: u64,
    pub delta: u64,
}

impl FamilyParams {
    pub fn new(d: u64, delta: u64) -> Result<Self> {
        if d < 3 {
            return Err(Error::InvalidArgument(format!("degree {d} < 3")));
        }
        if delta > smooth_genus(d) {
            return Err(Error::InvalidArgument(format!(
                "δ = {delta} exceeds (d-1)(d-2)/2 = {} for d = {d}",
                smooth_genus(d)
            )));
        }
        Ok(Self { d, delta })
    }

    pub fn k(&self) -> u64 {
        k_of(self.delta)
    }

    /// Geometric genus `g = (d−1)(d−2)/2 − δ`.
    pub fn genus(&self) -> u64 {
        smooth_genus(self.d) - self.delta
    }
}

/// `N_d = ⟨d−1, d⟩`.
pub fn n_d(d: u64) -> Result<NumericalSemigroup> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!("degree {d} < 3")));
    }
    let bound = semigroup_bound(d);
    // With s = a + b, n = a(d-1) + bd means s(d-1) <= n <= sd. Writing n = qd + r,
    // s = q works iff r = 0 and s = q + 1 works iff r >= d - q - 1.
    Ok(NumericalSemigroup::from_predicate(bound, |n| {
        let (q, r) = (n / d, n % d);
        r == 0 || r + q + 1 >= d
    }))
}

/// `N^(1)_{d,δ} = N_d ∪ {n ≥ (d−k−3)d + k(k+3)/2 − δ + 2}`.
pub fn family_n1(p: FamilyParams) -> Result<NumericalSemigroup> {
    let p = FamilyParams::new(p.d, p.delta)?;
    let (d, k, delta) = (p.d as i64, p.k() as i64, p.delta as i64);
    let threshold = (d - k - 3) * d + k * (k + 3) / 2 - delta + 2;
    let base = n_d(p.d)?;
    Ok(NumericalSemigroup::from_predicate(base.bound(), |n| {
        base.contains(n) || n as i64 >= threshold
    }))
}

/// Maximal-weight families built by adjoining one element per extra node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MaxVariant {
    Max,
    Max2,
    Max3,
    Max4,
}

impl MaxVariant {
    pub const ALL: [MaxVariant; 4] = [
        MaxVariant::Max,
        MaxVariant::Max2,
        MaxVariant::Max3,
        MaxVariant::Max4,
    ];

    /// Smallest δ at which the recursion starts.
    pub fn base_delta(self) -> u64 {
        match self {
            MaxVariant::Max | MaxVariant::Max2 => 1,
            MaxVariant::Max3 | MaxVariant::Max4 => 3,
        }
    }

    /// Element adjoined when passing from `δ−1` to `δ` nodes.
    fn step(self, d: i64, delta: i64) -> i64 {
        match self {
            MaxVariant::Max => (d - delta - 2) * d + 1,
            MaxVariant::Max2 => (d - delta - 2) * d + delta,
            MaxVariant::Max3 => (d - delta - 1) * d + 1,
            MaxVariant::Max4 => (d - delta - 1) * d + delta - 1,
        }
    }
}

impl fmt::Display for MaxVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MaxVariant::Max => "max",
            MaxVariant::Max2 => "max2",
            MaxVariant::Max3 => "max3",
            MaxVariant::Max4 => "max4",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for MaxVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(MaxVariant::Max),
            "max2" => Ok(MaxVariant::Max2),
            "max3" => Ok(MaxVariant::Max3),
            "max4" => Ok(MaxVariant::Max4),
            _ => Err(Error::Parse(format!("unknown max variant {s:?}"))),
        }
    }
}

/// Adjoins `value` to `s`, rejecting nonpositive values and values already present.
pub(crate) fn adjoin_checked(s: &mut NumericalSemigroup, value: i64, what: &str) -> Result<()> {
    if value <= 0 || value as u64 >= s.bound() || s.contains(value as u64) {
        return Err(Error::InvalidArgument(format!(
            "{what}: adjoined value {value} is not a remaining gap"
        )));
    }
    s.adjoin(value as u64);
    Ok(())
}

/// `N^(max)`, `N^(max2)`, `N^(max3)` or `N^(max4)` for the given parameters.
/// The result has exactly `g` gaps but need not be closed under addition.
pub fn family_max(p: FamilyParams, variant: MaxVariant) -> Result<NumericalSemigroup> {
    let p = FamilyParams::new(p.d, p.delta)?;
    let base = variant.base_delta();
    if p.delta < base {
        return Err(Error::InvalidArgument(format!(
            "{variant} is defined for δ ≥ {base}, got {}",
            p.delta
        )));
    }
    let mut s = match variant {
        MaxVariant::Max | MaxVariant::Max2 => {
            let mut s = n_d(p.d)?;
            adjoin_checked(&mut s, ((p.d - 3) * p.d + 1) as i64, "N_{d,1}")?;
            s
        }
        MaxVariant::Max3 | MaxVariant::Max4 => family_n1(FamilyParams::new(p.d, 3)?)?,
    };
    for delta in base + 1..=p.delta {
        let what = format!("{variant} at δ = {delta}");
        adjoin_checked(&mut s, variant.step(p.d as i64, delta as i64), &what)?;
    }
    Ok(s)
}
