//! Dual fat-vertex graph pairs on the sphere and their validation.
//!
//! A pair consists of two spherical fat-vertex graphs `G_P` (with `p` fat
//! vertices carrying `q` labels each) and `G_Q` (with `q` fat vertices
//! carrying `p` labels each), describing the same set of `p·q / 2` edge
//! arcs from two sides.  A *slot* is a (vertex, label) position on a fat
//! vertex boundary; the P-side slot `(v, x)` and the Q-side slot `(x, v)`
//! are the two addresses of the same point, so only the P-side matching is
//! stored and the Q side is recovered by transposition.
//!
//! Validated invariants:
//!
//! * orders `p`, `q` are positive and even, and each side has equally many
//!   positive and negative fat vertices (`SIGN_IMBALANCE`);
//! * the matching covers every slot exactly once (`SLOT_COVERAGE`);
//! * every edge joins two slots of opposite character, where the character
//!   of slot `(v, x)` is `parity(x) · sign(v)` (`PARITY_VIOLATION`);
//! * with the canonical rotation (labels counterclockwise on positive
//!   vertices, clockwise on negative ones) every connected component of
//!   both sides embeds in a sphere (`GENUS_NONZERO`);
//! * an optional component-containment map, if present, must form a tree
//!   of components per side (`NESTING_INCONSISTENT`).
//!
//! All ids are 0-based in the API and 1-based in JSON and `Display` output,
//! matching the usual labelling of vertices and labels from `1`.

use crate::error::{Error, Result, ValidationReport, ViolationCode};
use crate::sign::Sign;
use crate::view::EmbeddedView;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The two special fat vertices of `G_P` (0-based; called `1` and `2` in
/// the usual convention), the roots used by tree certificates and the
/// default Scharlemann label pair.
pub const SPECIAL_VERTICES: [usize; 2] = [0, 1];

/// Which graph of the pair is being viewed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Side {
    /// The side with `p` fat vertices and `q` labels.
    P,
    /// The side with `q` fat vertices and `p` labels.
    Q,
}

impl Side {
    /// The opposite side.
    pub fn other(self) -> Side {
        match self {
            Side::P => Side::Q,
            Side::Q => Side::P,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::P => "P",
            Side::Q => "Q",
        })
    }
}

/// A (fat vertex, label) position on one side.  Both fields are 0-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Slot {
    /// Fat vertex index.
    pub v: usize,
    /// Label index on that vertex.
    pub x: usize,
}

impl Slot {
    /// The same point addressed from the other side.
    pub fn transpose(self) -> Slot {
        Slot {
            v: self.x,
            x: self.v,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.v + 1, self.x + 1)
    }
}

/// The raw JSON form of a pair.
///
/// ```json
/// {
///   "p": 2, "q": 2,
///   "signsP": ["+", "-"], "signsQ": ["+", "-"],
///   "matching": [[[1, 1], [2, 1]], [[1, 2], [2, 2]]],
///   "nesting": { "P": [], "Q": [] }
/// }
/// ```
///
/// `matching` lists the edge arcs by their two P-side slots `[v, x]`
/// (1-based).  `nesting` is only meaningful for disconnected sides; see
/// [`RawNestingEntry`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPair {
    /// Number of fat vertices of `G_P` (= labels per fat vertex of `G_Q`).
    pub p: usize,
    /// Number of fat vertices of `G_Q` (= labels per fat vertex of `G_P`).
    pub q: usize,
    /// Signs of the P-side fat vertices, in vertex order.
    #[serde(rename = "signsP")]
    pub signs_p: Vec<Sign>,
    /// Signs of the Q-side fat vertices, in vertex order.
    #[serde(rename = "signsQ")]
    pub signs_q: Vec<Sign>,
    /// Edge arcs as pairs of 1-based P-side slots `[v, x]`.
    pub matching: Vec<[[usize; 2]; 2]>,
    /// Optional component containment for disconnected sides.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nesting: Option<RawNesting>,
}

/// Component containment maps for both sides.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawNesting {
    /// Entries for the P side.
    #[serde(rename = "P", default, skip_serializing_if = "Vec::is_empty")]
    pub p: Vec<RawNestingEntry>,
    /// Entries for the Q side.
    #[serde(rename = "Q", default, skip_serializing_if = "Vec::is_empty")]
    pub q: Vec<RawNestingEntry>,
}

/// One containment statement: component `component` sits inside face
/// `hostFace` of the arrangement, opening toward it through its own face
/// `ownFace`.
///
/// Components are indexed 0-based in the deterministic order produced by
/// component search (increasing smallest vertex); faces are global 0-based
/// indices in the deterministic face-tracing order of that side.  When no
/// nesting is given for a disconnected side, every component beyond the
/// first is placed side by side inside face `0` of the first component,
/// opening through its own face `0` (first traced face of the component).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct RawNestingEntry {
    /// The nested component.
    pub component: usize,
    /// The face of `component` that opens toward the host face.
    pub own_face: usize,
    /// The component owning the host face (must differ from `component`).
    pub host_component: usize,
    /// The face of the host component that contains the nested component.
    pub host_face: usize,
}

/// A validated pair with both side views built.
#[derive(Clone, Debug)]
pub struct IntersectionPair {
    p: usize,
    q: usize,
    signs_p: Vec<Sign>,
    signs_q: Vec<Sign>,
    /// Edge arcs as 0-based P-side slot pairs, in input order.
    edges: Vec<(Slot, Slot)>,
    nesting: Option<RawNesting>,
    view_p: EmbeddedView,
    view_q: EmbeddedView,
}

impl IntersectionPair {
    /// Validates raw data and builds both side views.
    pub fn from_raw(raw: &RawPair) -> Result<IntersectionPair> {
        let report = validate_pair(raw);
        if !report.is_valid() {
            return Err(Error::InvalidPair(report.violations));
        }
        let edges = edges_from_raw(raw);
        let view_p = build_side(raw, Side::P, &edges)?;
        let view_q = build_side(raw, Side::Q, &edges)?;
        Ok(IntersectionPair {
            p: raw.p,
            q: raw.q,
            signs_p: raw.signs_p.clone(),
            signs_q: raw.signs_q.clone(),
            edges,
            nesting: raw.nesting.clone(),
            view_p,
            view_q,
        })
    }

    /// Parses and validates a JSON pair.
    pub fn from_json(json: &str) -> Result<IntersectionPair> {
        let raw: RawPair = serde_json::from_str(json)
            .map_err(|e| Error::InvalidInput(format!("malformed pair JSON: {e}")))?;
        IntersectionPair::from_raw(&raw)
    }

    /// Number of P-side fat vertices.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Number of Q-side fat vertices.
    pub fn q(&self) -> usize {
        self.q
    }

    /// Sign of a fat vertex on the given side.
    pub fn sign(&self, side: Side, v: usize) -> Sign {
        match side {
            Side::P => self.signs_p[v],
            Side::Q => self.signs_q[v],
        }
    }

    /// Signs of all fat vertices on a side.
    pub fn signs(&self, side: Side) -> &[Sign] {
        match side {
            Side::P => &self.signs_p,
            Side::Q => &self.signs_q,
        }
    }

    /// Character of a slot on a side: `parity(label) * sign(vertex)`.
    ///
    /// Transposing a slot to the other side preserves its character, and
    /// the parity rule states that every edge joins slots of opposite
    /// character.
    pub fn char_of(&self, side: Side, s: Slot) -> Sign {
        match side {
            Side::P => self.signs_q[s.x] * self.signs_p[s.v],
            Side::Q => self.signs_p[s.x] * self.signs_q[s.v],
        }
    }

    /// The edge arcs as P-side slot pairs, in input order.
    pub fn edges(&self) -> &[(Slot, Slot)] {
        &self.edges
    }

    /// Number of edge arcs (`p·q / 2`).
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// The two slots of an edge as seen from a side.
    pub fn edge_slots(&self, side: Side, e: usize) -> (Slot, Slot) {
        let (a, b) = self.edges[e];
        match side {
            Side::P => (a, b),
            Side::Q => (a.transpose(), b.transpose()),
        }
    }

    /// The embedded view of a side.
    pub fn view(&self, side: Side) -> &EmbeddedView {
        match side {
            Side::P => &self.view_p,
            Side::Q => &self.view_q,
        }
    }

    /// Serializes back to raw (1-based) form.
    pub fn to_raw(&self) -> RawPair {
        RawPair {
            p: self.p,
            q: self.q,
            signs_p: self.signs_p.clone(),
            signs_q: self.signs_q.clone(),
            matching: self
                .edges
                .iter()
                .map(|&(a, b)| [[a.v + 1, a.x + 1], [b.v + 1, b.x + 1]])
                .collect(),
            nesting: self.nesting.clone(),
        }
    }
}

fn edges_from_raw(raw: &RawPair) -> Vec<(Slot, Slot)> {
    raw.matching
        .iter()
        .map(|&[[v1, x1], [v2, x2]]| {
            (
                Slot {
                    v: v1 - 1,
                    x: x1 - 1,
                },
                Slot {
                    v: v2 - 1,
                    x: x2 - 1,
                },
            )
        })
        .collect()
}

fn build_side(raw: &RawPair, side: Side, edges: &[(Slot, Slot)]) -> Result<EmbeddedView> {
    let (n_fat, n_labels, fat_signs, label_parities) = match side {
        Side::P => (raw.p, raw.q, raw.signs_p.clone(), raw.signs_q.clone()),
        Side::Q => (raw.q, raw.p, raw.signs_q.clone(), raw.signs_p.clone()),
    };
    let side_edges: Vec<(Slot, Slot)> = match side {
        Side::P => edges.to_vec(),
        Side::Q => edges
            .iter()
            .map(|&(a, b)| (a.transpose(), b.transpose()))
            .collect(),
    };
    let nesting = raw.nesting.as_ref().map(|n| match side {
        Side::P => n.p.as_slice(),
        Side::Q => n.q.as_slice(),
    });
    EmbeddedView::build(side, n_fat, n_labels, fat_signs, label_parities, &side_edges, nesting)
}

/// Checks all pair invariants, collecting every violation found.
pub fn validate_pair(raw: &RawPair) -> ValidationReport {
    let mut report = ValidationReport::default();

    let mut structural_ok = true;
    for (name, n) in [("p", raw.p), ("q", raw.q)] {
        if n == 0 || n % 2 != 0 {
            report.push(
                ViolationCode::InvalidInput,
                format!("{name} must be positive and even, got {n}"),
            );
            structural_ok = false;
        }
    }
    if raw.signs_p.len() != raw.p {
        report.push(
            ViolationCode::InvalidInput,
            format!("signsP has {} entries, expected p = {}", raw.signs_p.len(), raw.p),
        );
        structural_ok = false;
    }
    if raw.signs_q.len() != raw.q {
        report.push(
            ViolationCode::InvalidInput,
            format!("signsQ has {} entries, expected q = {}", raw.signs_q.len(), raw.q),
        );
        structural_ok = false;
    }
    if !structural_ok {
        return report;
    }

    for (name, signs) in [("P", &raw.signs_p), ("Q", &raw.signs_q)] {
        let plus = signs.iter().filter(|&&s| s == Sign::Plus).count();
        if 2 * plus != signs.len() {
            report.push(
                ViolationCode::SignImbalance,
                format!(
                    "side {name} has {plus} positive and {} negative vertices",
                    signs.len() - plus
                ),
            );
        }
    }

    // Slot coverage: every (v, x) must appear exactly once across all arcs.
    let mut in_range = true;
    for &[[v1, x1], [v2, x2]] in &raw.matching {
        for (v, x) in [(v1, x1), (v2, x2)] {
            if v == 0 || v > raw.p || x == 0 || x > raw.q {
                report.push(
                    ViolationCode::InvalidInput,
                    format!("slot ({v},{x}) out of range for p = {}, q = {}", raw.p, raw.q),
                );
                in_range = false;
            }
        }
    }
    if !in_range {
        return report;
    }
    let mut count = vec![0usize; raw.p * raw.q];
    for &[[v1, x1], [v2, x2]] in &raw.matching {
        count[(v1 - 1) * raw.q + (x1 - 1)] += 1;
        count[(v2 - 1) * raw.q + (x2 - 1)] += 1;
    }
    let mut coverage_ok = true;
    for v in 0..raw.p {
        for x in 0..raw.q {
            let c = count[v * raw.q + x];
            if c != 1 {
                report.push(
                    ViolationCode::SlotCoverage,
                    format!("slot ({},{}) covered {c} times", v + 1, x + 1),
                );
                coverage_ok = false;
            }
        }
    }
    if !coverage_ok {
        return report;
    }

    // Parity rule: characters at the two ends of every edge must differ.
    let edges = edges_from_raw(raw);
    for (i, &(a, b)) in edges.iter().enumerate() {
        let ca = raw.signs_q[a.x] * raw.signs_p[a.v];
        let cb = raw.signs_q[b.x] * raw.signs_p[b.v];
        if ca == cb {
            report.push(
                ViolationCode::ParityViolation,
                format!("edge {i} joins slots {a} and {b}, both of character {ca}"),
            );
        }
    }

    // Genus and nesting checks need the embedded views.
    for side in [Side::P, Side::Q] {
        match build_side(raw, side, &edges) {
            Ok(view) => {
                for (c, chi) in view.euler_by_component().iter().enumerate() {
                    if *chi != 2 {
                        report.push(
                            ViolationCode::GenusNonzero,
                            format!(
                                "side {side} component {c} has V - E + F = {chi}, expected 2"
                            ),
                        );
                    }
                }
            }
            Err(Error::InvalidInput(msg)) => {
                report.push(ViolationCode::NestingInconsistent, msg);
            }
            Err(e) => {
                report.push(ViolationCode::InvalidInput, e.to_string());
            }
        }
    }

    report
}
