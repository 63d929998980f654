//! Degeneration to a union of `d` general lines.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::retry_budget;
use crate::curvegeom::ProjectivePoint;
use crate::error::{Error, Result};
use crate::exactmath::TernaryForm;
use crate::linsys::{check_hypothesis_star, NodalConfiguration};
use crate::sampling;
use crate::semigroups::smooth_genus;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineArrangement {
    pub d: u32,
    pub delta: usize,
    pub lines: Vec<TernaryForm>,
    /// `L_2∩L_1`, then `L_3∩L_1, L_3∩L_2`, then `L_4∩L_1, …`.
    pub ordered_nodes: Vec<ProjectivePoint>,
    #[serde(rename = "P0")]
    pub p0: ProjectivePoint,
    pub seed: u64,
    /// Samplings needed (1 means the first draw passed every check).
    pub attempts: usize,
}

impl LineArrangement {
    /// The abstract configuration: first `δ` nodes, `P_0`, and `L_d` standing in for the tangent.
    pub fn configuration(&self) -> NodalConfiguration {
        let aux_forms: BTreeMap<String, TernaryForm> = self
            .lines
            .iter()
            .enumerate()
            .map(|(i, l)| (format!("L{}", i + 1), l.clone()))
            .collect();
        NodalConfiguration {
            d: self.d,
            curve: None,
            nodes: self.ordered_nodes[..self.delta].to_vec(),
            p: self.p0.clone(),
            t: self.lines.last().expect("d lines").clone(),
            aux_forms,
            aux_points: BTreeMap::new(),
            seed: Some(self.seed),
        }
    }

    /// The reducible curve `L_1 ⋯ L_d`.
    pub fn product(&self) -> TernaryForm {
        self.lines
            .iter()
            .skip(1)
            .fold(self.lines[0].clone(), |acc, l| &acc * l)
    }
}

fn ordered_intersections(lines: &[TernaryForm]) -> Option<Vec<ProjectivePoint>> {
    let mut out = Vec::new();
    for j in 1..lines.len() {
        for i in 0..j {
            out.push(ProjectivePoint::meet(&lines[j], &lines[i])?);
        }
    }
    Some(out)
}

/// Samples `d` lines in general position and `P_0` on `L_d`, resampling until
/// hypothesis (*) holds for the first `δ` nodes measured along `L_d`.
pub fn line_arrangement(d: u32, delta: usize, seed: u64) -> Result<LineArrangement> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!("need d ≥ 3, got {d}")));
    }
    let g = smooth_genus(d as u64) as usize;
    if delta > g {
        return Err(Error::InvalidArgument(format!(
            "δ = {delta} exceeds (d−1)(d−2)/2 = {g}"
        )));
    }
    let budget = retry_budget();
    let mut rng = sampling::rng(seed);
    let mut last = String::new();
    for attempt in 1..=budget {
        let lines: Vec<TernaryForm> = (0..d).map(|_| sampling::line(&mut rng)).collect();
        let Some(nodes) = ordered_intersections(&lines) else {
            last = "two lines coincide or are parallel".into();
            continue;
        };
        let distinct = (0..nodes.len()).all(|i| !nodes[..i].contains(&nodes[i]));
        if !distinct {
            last = "three lines are concurrent".into();
            continue;
        }
        let l_d = lines.last().expect("d lines");
        let p0 = sampling::point_on_line(&mut rng, l_d, &nodes);
        let arrangement = LineArrangement {
            d,
            delta,
            lines,
            ordered_nodes: nodes,
            p0,
            seed,
            attempts: attempt,
        };
        let report = check_hypothesis_star(&arrangement.configuration())?;
        if report.holds {
            return Ok(arrangement);
        }
        last = format!("hypothesis (*) fails: {report:?}");
    }
    Err(Error::RetryExhausted { budget, last })
}
