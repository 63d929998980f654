//! The two pencils whose general members realize the maximal-weight families.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::retry_budget;
use crate::curvegeom::{PlaneCurve, ProjectivePoint};
use crate::error::{Error, Result};
use crate::exactmath::{q, Rational, TernaryForm};
use crate::linsys::NodalConfiguration;
use crate::sampling;
use crate::semigroups::MaxVariant;

/// Generators `C_1, C_2` of a pencil together with the marked data used to build them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilSpec {
    pub variant: MaxVariant,
    pub d: u32,
    pub delta: usize,
    pub c1: TernaryForm,
    pub c2: TernaryForm,
    pub nodes: Vec<ProjectivePoint>,
    #[serde(rename = "P")]
    pub p: ProjectivePoint,
    #[serde(rename = "T")]
    pub t: TernaryForm,
    /// `L`, `L_i`, `L'_i`, `T'` and `C` by name.
    pub aux_forms: BTreeMap<String, TernaryForm>,
    pub seed: u64,
}

impl PencilSpec {
    /// The member `λ C_1 + μ C_2` as an uncertified configuration.
    pub fn member_at(&self, lambda: &Rational, mu: &Rational) -> Result<NodalConfiguration> {
        let form = &self.c1.scale(lambda) + &self.c2.scale(mu);
        let mut aux_forms = self.aux_forms.clone();
        aux_forms.insert("C1".into(), self.c1.clone());
        aux_forms.insert("C2".into(), self.c2.clone());
        Ok(NodalConfiguration {
            d: self.d,
            curve: Some(PlaneCurve::new(form)?),
            nodes: self.nodes.clone(),
            p: self.p.clone(),
            t: self.t.clone(),
            aux_forms,
            aux_points: BTreeMap::new(),
            seed: Some(self.seed),
        })
    }
}

fn product(forms: &[&TernaryForm]) -> TernaryForm {
    forms
        .iter()
        .fold(TernaryForm::constant(q(1)), |acc, f| &acc * f)
}

/// Marked data for one attempt; `None` when an avoidance condition fails.
fn sample(
    variant: MaxVariant,
    d: u32,
    delta: usize,
    rng: &mut impl rand::Rng,
) -> Option<PencilSpec> {
    let mut forms = BTreeMap::new();
    let l = sampling::line(rng);
    let mut nodes: Vec<ProjectivePoint> = Vec::new();
    let p;
    let t;
    let mut lines: Vec<TernaryForm> = vec![l.clone()];
    let (c1, c2_parts, c_degree);
    match variant {
        MaxVariant::Max => {
            p = sampling::point_on_line(rng, &l, &[]);
            for _ in 0..delta {
                let mut excl = nodes.clone();
                excl.push(p.clone());
                nodes.push(sampling::point_on_line(rng, &l, &excl));
            }
            t = sampling::line_through(rng, &p);
            let mut parts = vec![t.clone()];
            for (i, s) in nodes.iter().enumerate() {
                let li = sampling::line_through(rng, s);
                let lpi = sampling::line_through(rng, s);
                forms.insert(format!("L{}", i + 1), li.clone());
                forms.insert(format!("L'{}", i + 1), lpi.clone());
                parts.push(li);
                parts.push(lpi);
            }
            c1 = l.pow(d);
            c_degree = d as usize - 2 * delta - 1;
            c2_parts = parts;
        }
        MaxVariant::Max2 => {
            for _ in 0..delta {
                nodes.push(sampling::point_on_line(rng, &l, &nodes.clone()));
            }
            p = sampling::affine_point(rng);
            if p.is_on(&l) {
                return None;
            }
            t = sampling::line_through(rng, &p);
            let t2 = sampling::line_through(rng, &p);
            forms.insert("T'".into(), t2.clone());
            let mut parts = vec![l.clone(), t.clone()];
            let mut doubled = Vec::new();
            for (i, s) in nodes.iter().enumerate() {
                let li = p.line_to(s);
                let lpi = sampling::line_through(rng, s);
                forms.insert(format!("L{}", i + 1), li.clone());
                forms.insert(format!("L'{}", i + 1), lpi.clone());
                doubled.push(li);
                parts.push(lpi);
            }
            let refs: Vec<&TernaryForm> = doubled.iter().collect();
            c1 = &product(&refs).pow(2) * &t2.pow(d - 2 * delta as u32);
            c_degree = d as usize - delta - 2;
            c2_parts = parts;
            lines.push(t2);
        }
        _ => return None,
    }
    forms.insert("L".into(), l.clone());
    lines.push(t.clone());
    lines.extend(
        forms
            .iter()
            .filter(|(k, _)| k.starts_with('L') && k.as_str() != "L")
            .map(|(_, v)| v.clone()),
    );

    // every line is proper and distinct, T avoids the nodes, the other lines avoid P
    let distinct = (0..lines.len()).all(|i| (0..i).all(|j| !lines[i].proportional(&lines[j])));
    if !distinct || nodes.iter().any(|s| s.is_on(&t)) {
        return None;
    }
    if variant == MaxVariant::Max {
        let off_p = forms
            .iter()
            .filter(|(k, _)| k.starts_with("L") && k.as_str() != "L");
        if off_p.clone().any(|(_, f)| p.is_on(f)) {
            return None;
        }
    }

    let mut special: Vec<ProjectivePoint> = nodes.clone();
    special.push(p.clone());
    for i in 0..lines.len() {
        for j in 0..i {
            if let Some(x) = ProjectivePoint::meet(&lines[i], &lines[j]) {
                special.push(x);
            }
        }
    }
    let c = if c_degree == 0 {
        TernaryForm::constant(q(1))
    } else {
        let c = sampling::form(rng, c_degree as u32);
        if special.iter().any(|x| x.is_on(&c)) {
            return None;
        }
        c
    };
    forms.insert("C".into(), c.clone());
    let mut refs: Vec<&TernaryForm> = c2_parts.iter().collect();
    refs.push(&c);
    let c2 = product(&refs);
    Some(PencilSpec {
        variant,
        d,
        delta,
        c1,
        c2,
        nodes,
        p,
        t,
        aux_forms: forms,
        seed: 0,
    })
}

/// Builds the pencil for `max` (`d ≥ 2δ+1`) or `max2` (`d ≥ 2δ`, `δ ≤ d−2`).
pub fn pencil(variant: MaxVariant, d: u32, delta: usize, seed: u64) -> Result<PencilSpec> {
    if delta == 0 {
        return Err(Error::InvalidArgument(
            "pencils need at least one node".into(),
        ));
    }
    let need = match variant {
        MaxVariant::Max => 2 * delta + 1,
        MaxVariant::Max2 => (2 * delta).max(delta + 2),
        other => {
            return Err(Error::InvalidArgument(format!(
                "no pencil construction for {other}"
            )))
        }
    };
    if (d as usize) < need {
        return Err(Error::InvalidArgument(format!(
            "{variant} with δ = {delta} needs d ≥ {need}, got {d}"
        )));
    }
    let budget = retry_budget();
    let mut rng = sampling::rng(seed);
    for _ in 0..budget {
        if let Some(mut spec) = sample(variant, d, delta, &mut rng) {
            spec.seed = seed;
            return Ok(spec);
        }
    }
    Err(Error::RetryExhausted {
        budget,
        last: "avoidance conditions on the auxiliary lines".into(),
    })
}

/// A certified general member `λ C_1 + μ C_2` with seeded `(λ : μ)`.
pub fn general_member(spec: &PencilSpec, seed: u64) -> Result<NodalConfiguration> {
    let budget = retry_budget();
    let mut rng = sampling::rng(sampling::derive_seed(seed, 1));
    let mut last = String::new();
    for _ in 0..budget {
        let lambda = q(sampling::nonzero_int(&mut rng, sampling::HEIGHT));
        let mu = q(sampling::nonzero_int(&mut rng, sampling::HEIGHT));
        let mut cfg = spec.member_at(&lambda, &mu)?;
        cfg.seed = Some(seed);
        let cert = cfg.certify(seed);
        if cert.certified {
            return Ok(cfg);
        }
        last = cert.failure.unwrap_or_default();
    }
    Err(Error::RetryExhausted { budget, last })
}
