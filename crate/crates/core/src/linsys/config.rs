//! A nodal curve with a marked total inflection point, and its certification.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::curvegeom::{
    inflection_order, is_ordinary_node, singular_locus_audit, tangent_line, PlaneCurve,
    ProjectivePoint, SingularAuditReport,
};
use crate::error::{Error, Result};
use crate::exactmath::TernaryForm;
use crate::semigroups::smooth_genus;

/// `Γ` of degree `d` with nodes `s_1, …, s_δ`, a point `P` and its tangent `T`.
///
/// `curve` may be absent for abstract checks; in that case `T` stands in for
/// the curve near `P` (the degeneration to a union of lines).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodalConfiguration {
    pub d: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<PlaneCurve>,
    pub nodes: Vec<ProjectivePoint>,
    #[serde(rename = "P")]
    pub p: ProjectivePoint,
    #[serde(rename = "T")]
    pub t: TernaryForm,
    /// Auxiliary forms of the construction (lines, pencil generators).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub aux_forms: BTreeMap<String, TernaryForm>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub aux_points: BTreeMap<String, ProjectivePoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Outcome of every check in the certification chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub certified: bool,
    pub nodes_ordinary: Vec<bool>,
    pub p_smooth: bool,
    pub tangent_matches: bool,
    pub inflection_order: Option<usize>,
    /// Total inflection with `T` not a component forces irreducibility.
    pub irreducible: bool,
    pub line_components: Vec<String>,
    pub audit: Option<SingularAuditReport>,
    pub failure: Option<String>,
}

impl NodalConfiguration {
    pub fn new(curve: PlaneCurve, nodes: Vec<ProjectivePoint>, p: ProjectivePoint) -> Result<Self> {
        let t = tangent_line(&curve, &p)?;
        Ok(Self {
            d: curve.degree(),
            curve: Some(curve),
            nodes,
            p,
            t,
            aux_forms: BTreeMap::new(),
            aux_points: BTreeMap::new(),
            seed: None,
        })
    }

    pub fn delta(&self) -> usize {
        self.nodes.len()
    }

    pub fn genus(&self) -> i64 {
        smooth_genus(self.d as u64) as i64 - self.nodes.len() as i64
    }

    pub fn require_curve(&self) -> Result<&PlaneCurve> {
        self.curve
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("configuration has no curve".into()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("configuration serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Runs the full chain: ordinary nodes, smooth total inflection at `P` with
    /// tangent `T`, no line components among the auxiliary lines, and the
    /// singular-locus audit with the given seed.
    pub fn certify(&self, seed: u64) -> Certificate {
        let mut cert = Certificate {
            certified: false,
            nodes_ordinary: Vec::new(),
            p_smooth: false,
            tangent_matches: false,
            inflection_order: None,
            irreducible: false,
            line_components: Vec::new(),
            audit: None,
            failure: None,
        };
        let Some(curve) = &self.curve else {
            cert.failure = Some("configuration has no curve".into());
            return cert;
        };
        let fail = |cert: &mut Certificate, msg: String| {
            if cert.failure.is_none() {
                cert.failure = Some(msg);
            }
        };
        if curve.degree() != self.d {
            fail(
                &mut cert,
                format!("curve has degree {}, expected {}", curve.degree(), self.d),
            );
        }
        if self.genus() < 0 {
            fail(
                &mut cert,
                format!(
                    "{} nodes exceed the genus bound for degree {}",
                    self.nodes.len(),
                    self.d
                ),
            );
        }
        for s in &self.nodes {
            let ok = is_ordinary_node(curve, s).unwrap_or(false);
            if !ok {
                fail(&mut cert, format!("{s} is not an ordinary node"));
            }
            cert.nodes_ordinary.push(ok);
        }
        cert.p_smooth = curve.is_smooth_at(&self.p);
        if !cert.p_smooth {
            fail(
                &mut cert,
                format!("P = {} is not a smooth point of the curve", self.p),
            );
        } else {
            let t = tangent_line(curve, &self.p).expect("smooth point");
            cert.tangent_matches = t.proportional(&self.t);
            if !cert.tangent_matches {
                fail(&mut cert, format!("tangent at P is {t}, not {}", self.t));
            }
            match inflection_order(curve, &self.p) {
                Ok(e) => {
                    cert.inflection_order = Some(e);
                    cert.irreducible = e == self.d as usize;
                    if e != self.d as usize {
                        fail(
                            &mut cert,
                            format!("inflection order {e}, not a total inflection"),
                        );
                    }
                }
                Err(e) => fail(&mut cert, e.to_string()),
            }
        }
        for (name, form) in &self.aux_forms {
            if form.degree() == 1 && curve.form().is_divisible_by(form) {
                cert.line_components.push(name.clone());
            }
        }
        if curve.form().is_divisible_by(&self.t) {
            cert.line_components.push("T".into());
        }
        if !cert.line_components.is_empty() {
            cert.irreducible = false;
            let names = cert.line_components.join(", ");
            fail(&mut cert, format!("line components: {names}"));
        }
        if cert.failure.is_none() {
            match singular_locus_audit(curve, &self.nodes, seed) {
                Ok(report) => {
                    if !report.certified {
                        fail(
                            &mut cert,
                            report
                                .failure
                                .clone()
                                .unwrap_or_else(|| "audit failed".into()),
                        );
                    }
                    cert.audit = Some(report);
                }
                Err(e) => fail(&mut cert, e.to_string()),
            }
        }
        cert.certified = cert.failure.is_none();
        cert
    }
}
