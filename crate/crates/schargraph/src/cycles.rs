//! Cycle, web, and uniform-set detectors on one side of a pair.
//!
//! For a label `x`, following the edge at slot `(v, x)` out of every fat
//! vertex `v` defines a functional graph on the vertices.  Its directed
//! cycles through same-sign vertices are the *x-cycles*.  An x-cycle is
//! *great* when one side of its closed curve contains only vertices of the
//! cycle's sign, and it is a *Scharlemann cycle* when one side contains no
//! vertices and no edges at all — the boundary corners of that empty side
//! then pin a single pair of adjacent labels.  An x-cycle that is not a
//! Scharlemann cycle is *new*.
//!
//! Uniform-sign vertex sets enter in two forms.  The maximal connected
//! *(s)-sets* are the components of the same-sign adjacency: every edge
//! leaving such a component goes to the opposite sign by maximality.  An
//! (s)-set is *innermost* when some region of its induced subgraph holds
//! every remaining vertex (so the complementary disk holds the set and
//! nothing else).  A *great m-web* is a uniform-sign set with the same
//! one-region property and exactly `m` edges leaving it.
//!
//! The remaining routines package recurring arguments: descending from a
//! nontrivial cycle disk to an innermost (s)-set inside it, classifying the
//! components spanned by edges running between two label sets into trees
//! hanging off a special vertex versus uniform directed cycles, the
//! parallel/antiparallel incidence properties `P` and `A` (dual to each
//! other across the two sides), isolated vertices, and the label sets swept
//! on the two sides of a Scharlemann cycle's edge set in the cross graph.

use crate::error::{Error, Result};
use crate::pair::{IntersectionPair, Side, Slot, SPECIAL_VERTICES};
use crate::sign::Sign;
use crate::view::{EmbeddedView, SubView};
use std::collections::BTreeSet;

/// Vertices a sign-class search is willing to sweep exhaustively.
const SUBSET_SEARCH_LIMIT: usize = 16;

/// A directed cycle of the label-`x` functional graph on same-sign
/// vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XCycle {
    /// The label whose slots the cycle leaves every vertex through.
    pub x: usize,
    /// Vertices in functional order, starting at the smallest.
    pub vertices: Vec<usize>,
    /// `edges[i]` is the edge leaving `vertices[i]` at label `x`.
    pub edges: Vec<usize>,
    /// The common sign of the cycle's vertices.
    pub sign: Sign,
    /// Some side of the cycle contains only vertices of `sign`.
    pub great: bool,
    /// Some side of the cycle contains no vertices and no edges.
    pub scharlemann: bool,
    /// Not a Scharlemann cycle.
    pub new: bool,
    /// Number of vertices the cycle traverses.
    pub order: usize,
    /// For Scharlemann cycles: the adjacent label pair its empty-side
    /// corners run between (ascending), when all corners agree.
    pub label_pair: Option<(usize, usize)>,
    /// For Scharlemann cycles: the empty region id in [`cycle_subview`].
    pub empty_region: Option<usize>,
}

/// The subview keeping exactly a cycle's vertices and edges.
///
/// The cycle is a simple closed curve, so the subview has two regions:
/// the two sides of the cycle.
pub fn cycle_subview<'a>(view: &'a EmbeddedView, cycle: &XCycle) -> SubView<'a> {
    let mut kept_edge = vec![false; view.n_edges()];
    for &e in &cycle.edges {
        kept_edge[e] = true;
    }
    let mut kept_vertex = vec![false; view.n_fat];
    for &v in &cycle.vertices {
        kept_vertex[v] = true;
    }
    view.subview(kept_edge, kept_vertex)
}

/// The far endpoint slot of the edge at slot `s`.
pub fn far_endpoint(view: &EmbeddedView, s: Slot) -> Slot {
    let e = view.dart_at(s) / 2;
    let (a, b) = view.edge_slots(e);
    if a == s {
        b
    } else {
        a
    }
}

/// All x-cycles of `view` at label `x`, ordered by smallest vertex.
pub fn find_x_cycles(view: &EmbeddedView, x: usize) -> Vec<XCycle> {
    assert!(x < view.n_labels, "label {x} out of range");
    let n = view.n_fat;
    let next: Vec<usize> = (0..n)
        .map(|v| far_endpoint(view, Slot { v, x }).v)
        .collect();

    // Cycles of the functional graph.
    let mut state = vec![0u8; n]; // 0 unvisited, 1 on current path, 2 done
    let mut raw_cycles: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        let mut path = Vec::new();
        let mut v = start;
        while state[v] == 0 {
            state[v] = 1;
            path.push(v);
            v = next[v];
        }
        if state[v] == 1 {
            let pos = path.iter().position(|&u| u == v).unwrap();
            raw_cycles.push(path[pos..].to_vec());
        }
        for &u in &path {
            state[u] = 2;
        }
    }

    let mut out = Vec::new();
    for cyc in raw_cycles {
        let sign = view.fat_signs[cyc[0]];
        if cyc.iter().any(|&v| view.fat_signs[v] != sign) {
            continue;
        }
        // Start at the smallest vertex, keeping functional order.
        let k = cyc
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap();
        let vertices: Vec<usize> = cyc[k..].iter().chain(cyc[..k].iter()).copied().collect();
        let edges: Vec<usize> = vertices
            .iter()
            .map(|&v| view.dart_at(Slot { v, x }) / 2)
            .collect();
        // A single edge walked forth and back is a path, not a closed
        // curve; skip it.
        if edges.len() == 2 && edges[0] == edges[1] {
            continue;
        }
        let order = vertices.len();
        let mut cycle = XCycle {
            x,
            vertices,
            edges,
            sign,
            great: false,
            scharlemann: false,
            new: true,
            order,
            label_pair: None,
            empty_region: None,
        };
        let sub = cycle_subview(view, &cycle);
        debug_assert_eq!(sub.n_regions, 2, "a closed curve has two sides");
        for r in 0..sub.n_regions {
            let inside = sub.vertices_inside(r);
            if inside.iter().all(|&v| view.fat_signs[v] == sign) {
                cycle.great = true;
            }
            if cycle.empty_region.is_none()
                && inside.is_empty()
                && sub.deleted_edges_inside(r).is_empty()
            {
                cycle.scharlemann = true;
                cycle.new = false;
                cycle.empty_region = Some(r);
                cycle.label_pair = empty_side_label_pair(&sub, r);
            }
        }
        out.push(cycle);
    }
    out.sort_by_key(|c| c.vertices[0]);
    out
}

/// All x-cycles over every label, ordered by label then smallest vertex.
pub fn all_x_cycles(view: &EmbeddedView) -> Vec<XCycle> {
    (0..view.n_labels)
        .flat_map(|x| find_x_cycles(view, x))
        .collect()
}

/// The common corner label pair around an empty cycle side.
///
/// Every corner of an empty region is a unit corner (an interior slot
/// would push its deleted edge into the region), so each corner runs
/// between two adjacent labels.  Returns the pair when all corners agree
/// on one unordered, cyclically adjacent pair.
fn empty_side_label_pair(sub: &SubView<'_>, r: usize) -> Option<(usize, usize)> {
    let q = sub.view.n_labels;
    let walks = sub.walks_of_region(r);
    let mut pair: Option<(usize, usize)> = None;
    for &w in walks {
        for c in sub.corners_of_walk(w) {
            debug_assert!(
                sub.corner_interior_slots(&c).is_empty(),
                "empty region corners are unit corners"
            );
            let a = sub.view.slot_of(c.arrive).x;
            let b = sub.view.slot_of(c.depart).x;
            let this = (a.min(b), a.max(b));
            match pair {
                None => pair = Some(this),
                Some(p) if p == this => {}
                Some(_) => return None,
            }
        }
    }
    let (a, b) = pair?;
    let adjacent = (a + 1) % q == b || (b + 1) % q == a;
    adjacent.then_some((a, b))
}

/// The Scharlemann census of one side: all Scharlemann cycles, and
/// whether they agree on one label pair and one order.
#[derive(Clone, Debug)]
pub struct ScharlemannReport {
    /// Every Scharlemann cycle, over all labels.
    pub cycles: Vec<XCycle>,
    /// All cycles share one unordered label pair and one order.
    pub consistent: bool,
    /// Human-readable description of the first disagreement.
    pub note: Option<String>,
}

/// Collects all Scharlemann cycles and checks pair/order consistency.
pub fn scharlemann_consistency(view: &EmbeddedView) -> ScharlemannReport {
    let cycles: Vec<XCycle> = all_x_cycles(view)
        .into_iter()
        .filter(|c| c.scharlemann)
        .collect();
    let mut consistent = true;
    let mut note = None;
    let mut seen: Option<(Option<(usize, usize)>, usize)> = None;
    for c in &cycles {
        if c.label_pair.is_none() {
            consistent = false;
            note = Some(format!(
                "cycle on {:?} at label {} has inconsistent corner labels",
                c.vertices, c.x
            ));
            break;
        }
        let key = (c.label_pair, c.order);
        match &seen {
            None => seen = Some(key),
            Some(k) if *k == key => {}
            Some(k) => {
                consistent = false;
                note = Some(format!(
                    "cycle on {:?} at label {} has pair {:?} order {}, clashing with pair {:?} order {}",
                    c.vertices, c.x, c.label_pair, c.order, k.0, k.1
                ));
                break;
            }
        }
    }
    ScharlemannReport {
        cycles,
        consistent,
        note,
    }
}

/// The region of `sub` containing every deleted vertex, when one exists.
///
/// With nothing deleted the whole complement qualifies; region `0` is
/// returned.
fn containing_region(sub: &SubView<'_>) -> Option<usize> {
    let others: Vec<usize> = (0..sub.view.n_fat)
        .filter(|&v| !sub.kept_vertex[v])
        .collect();
    if others.is_empty() {
        return Some(0);
    }
    (0..sub.n_regions).find(|&r| sub.deleted_vertices_inside(r).len() == others.len())
}

/// A uniform-sign vertex set whose induced subgraph leaves every other
/// vertex in one region, with exactly `m` edges leaving the set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GreatWeb {
    /// The web's vertices.
    pub vertices: BTreeSet<usize>,
    /// Their common sign.
    pub sign: Sign,
    /// Number of edges leaving the set.
    pub m: usize,
    /// Region of the induced subview holding every other vertex.
    pub witness_region: usize,
    /// The induced subgraph is connected.
    pub connected: bool,
}

/// Exhaustively finds every great `m`-web of `view`.
///
/// Sweeps all nonempty uniform-sign subsets, so each sign class must have
/// at most [`SUBSET_SEARCH_LIMIT`] vertices.
pub fn find_great_webs(view: &EmbeddedView, m: usize) -> Result<Vec<GreatWeb>> {
    let mut out = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        let class: Vec<usize> = (0..view.n_fat)
            .filter(|&v| view.fat_signs[v] == sign)
            .collect();
        if class.len() > SUBSET_SEARCH_LIMIT {
            return Err(Error::BudgetExceeded(format!(
                "web search sweeps subsets of a sign class; {} vertices exceed the {} limit",
                class.len(),
                SUBSET_SEARCH_LIMIT
            )));
        }
        for mask in 1usize..(1 << class.len()) {
            let verts: BTreeSet<usize> = class
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect();
            let leaving = leaving_edges(view, &verts);
            if leaving.len() != m {
                continue;
            }
            let sub = view.induced_subview(&verts);
            let Some(witness_region) = containing_region(&sub) else {
                continue;
            };
            out.push(GreatWeb {
                connected: sub.is_connected(),
                vertices: verts,
                sign,
                m,
                witness_region,
            });
        }
    }
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(out)
}

/// Edge ids with exactly one endpoint vertex in `verts`.
pub fn leaving_edges(view: &EmbeddedView, verts: &BTreeSet<usize>) -> Vec<usize> {
    (0..view.n_edges())
        .filter(|&e| {
            let (a, b) = view.edge_slots(e);
            verts.contains(&a.v) != verts.contains(&b.v)
        })
        .collect()
}

/// A maximal connected set of same-sign vertices joined by same-sign
/// edges.  By maximality every edge leaving the set reaches the opposite
/// sign.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SSet {
    /// The common sign.
    pub sign: Sign,
    /// The set's vertices.
    pub vertices: BTreeSet<usize>,
    /// Labels at which edges leave the set (set-side slot labels).
    pub leave_labels: BTreeSet<usize>,
    /// Edge ids leaving the set.
    pub leaving_edges: Vec<usize>,
    /// Some region of the induced subgraph holds every other vertex.
    pub innermost: bool,
    /// That region, when `innermost`.
    pub witness_region: Option<usize>,
}

/// The maximal connected (s)-sets of both signs, ordered by smallest
/// vertex.
pub fn find_s_sets(view: &EmbeddedView) -> Vec<SSet> {
    let n = view.n_fat;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let root = find(parent, parent[v]);
            parent[v] = root;
        }
        parent[v]
    }
    for e in 0..view.n_edges() {
        let (a, b) = view.edge_slots(e);
        if view.fat_signs[a.v] == view.fat_signs[b.v] {
            let ra = find(&mut parent, a.v);
            let rb = find(&mut parent, b.v);
            parent[ra] = rb;
        }
    }
    let mut comps: Vec<BTreeSet<usize>> = Vec::new();
    let mut comp_of_root: Vec<Option<usize>> = vec![None; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        let id = *comp_of_root[r].get_or_insert_with(|| {
            comps.push(BTreeSet::new());
            comps.len() - 1
        });
        comps[id].insert(v);
    }
    let mut out = Vec::new();
    for vertices in comps {
        let sign = view.fat_signs[*vertices.first().unwrap()];
        let leaving = leaving_edges(view, &vertices);
        let leave_labels: BTreeSet<usize> = leaving
            .iter()
            .flat_map(|&e| {
                let (a, b) = view.edge_slots(e);
                [a, b]
            })
            .filter(|s| vertices.contains(&s.v))
            .map(|s| s.x)
            .collect();
        let sub = view.induced_subview(&vertices);
        let witness_region = containing_region(&sub);
        out.push(SSet {
            sign,
            innermost: witness_region.is_some(),
            witness_region,
            leave_labels,
            leaving_edges: leaving,
            vertices,
        });
    }
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

/// The non-special labels `2..n_labels` (the regular vertices of the
/// other side).
pub fn regular_labels(view: &EmbeddedView) -> BTreeSet<usize> {
    (0..view.n_labels)
        .filter(|x| !SPECIAL_VERTICES.contains(x))
        .collect()
}

/// Expected conclusions for an innermost (s)-set sitting in a disk.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SDiskFlags {
    /// The set has at least two vertices.
    pub size_ok: bool,
    /// Edges leave the set at every regular label.
    pub covers_regular: bool,
    /// The other side satisfies property `P` of its regular vertices
    /// against the set's vertices (as labels).
    pub parallel_regular: bool,
    /// When the set carries no Scharlemann cycle: edges leave at *every*
    /// label.  `None` when a Scharlemann cycle lives on the set.
    pub full_leave_without_scharlemann: Option<bool>,
}

impl SDiskFlags {
    /// True when every applicable conclusion holds.
    pub fn all_hold(&self) -> bool {
        self.size_ok
            && self.covers_regular
            && self.parallel_regular
            && self.full_leave_without_scharlemann.unwrap_or(true)
    }
}

/// Checks the innermost-(s)-set conclusions for `sset` on `side`.
pub fn s_disk_flags(pair: &IntersectionPair, side: Side, sset: &SSet) -> SDiskFlags {
    let view = pair.view(side);
    let other = pair.view(side.other());
    let regular = regular_labels(view);
    let covers_regular = regular.iter().all(|x| sset.leave_labels.contains(x));
    let regular_vertices: BTreeSet<usize> = (0..other.n_fat)
        .filter(|v| !SPECIAL_VERTICES.contains(v))
        .collect();
    let parallel_regular = property_p(other, &regular_vertices, &sset.vertices);
    let has_scharlemann = all_x_cycles(view)
        .iter()
        .any(|c| c.scharlemann && c.vertices.iter().all(|v| sset.vertices.contains(v)));
    let full_leave_without_scharlemann = if has_scharlemann {
        None
    } else {
        Some(sset.leave_labels.len() == view.n_labels)
    };
    SDiskFlags {
        size_ok: sset.vertices.len() >= 2,
        covers_regular,
        parallel_regular,
        full_leave_without_scharlemann,
    }
}

/// Internal-edge count at one label of an (s)-set with `n_labels - 2`
/// leaving edges.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LabelEdgeCount {
    /// The regular label counted.
    pub label: usize,
    /// Internal edges of the set meeting that label.
    pub count: usize,
    /// The expected count, one less than the set's size.
    pub expected: usize,
}

/// When `sset` has exactly `n_labels - 2` leaving edges, counts the
/// internal edges meeting each regular label (each should meet
/// `|V| - 1`).  `None` when the leaving count differs.
pub fn edges_in_s_disk_counts(view: &EmbeddedView, sset: &SSet) -> Option<Vec<LabelEdgeCount>> {
    if sset.leaving_edges.len() != view.n_labels - 2 {
        return None;
    }
    let internal: Vec<(Slot, Slot)> = (0..view.n_edges())
        .map(|e| view.edge_slots(e))
        .filter(|(a, b)| sset.vertices.contains(&a.v) && sset.vertices.contains(&b.v))
        .collect();
    let expected = sset.vertices.len() - 1;
    Some(
        regular_labels(view)
            .into_iter()
            .map(|label| LabelEdgeCount {
                label,
                count: internal
                    .iter()
                    .filter(|(a, b)| a.x == label || b.x == label)
                    .count(),
                expected,
            })
            .collect(),
    )
}

/// Property `P(V, L)`: every vertex of `V` meets, at some label of `L`,
/// an edge to a vertex of its own sign.
pub fn property_p(view: &EmbeddedView, vertices: &BTreeSet<usize>, labels: &BTreeSet<usize>) -> bool {
    vertices.iter().all(|&v| {
        labels.iter().any(|&x| {
            let far = far_endpoint(view, Slot { v, x });
            view.fat_signs[far.v] == view.fat_signs[v]
        })
    })
}

/// Property `A(V, L)`: every label of `L` has, at some vertex of `V`, an
/// edge to a vertex of the opposite sign.
pub fn property_a(view: &EmbeddedView, vertices: &BTreeSet<usize>, labels: &BTreeSet<usize>) -> bool {
    labels.iter().all(|&x| {
        vertices.iter().any(|&v| {
            let far = far_endpoint(view, Slot { v, x });
            view.fat_signs[far.v] != view.fat_signs[v]
        })
    })
}

/// Both incidence properties of `(vertices, labels)` on one side.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PropertyCheck {
    /// Property `P` holds.
    pub parallel: bool,
    /// Property `A` holds.
    pub antiparallel: bool,
}

/// Evaluates properties `P` and `A` on the chosen side.
pub fn check_properties(
    pair: &IntersectionPair,
    side: Side,
    vertices: &BTreeSet<usize>,
    labels: &BTreeSet<usize>,
) -> PropertyCheck {
    let view = pair.view(side);
    PropertyCheck {
        parallel: property_p(view, vertices, labels),
        antiparallel: property_a(view, vertices, labels),
    }
}

/// Vertices whose every edge runs to the opposite sign.
pub fn isolated_vertices(view: &EmbeddedView) -> Vec<usize> {
    (0..view.n_fat)
        .filter(|&v| {
            (0..view.n_labels).all(|x| {
                let far = far_endpoint(view, Slot { v, x });
                view.fat_signs[far.v] != view.fat_signs[v]
            })
        })
        .collect()
}

/// Descends from one side of an x-cycle to an innermost (s)-set inside
/// it.
///
/// `side_region` indexes the regions of [`cycle_subview`] (`0` or `1`).
/// When every vertex on that side shares the cycle's sign the disk is
/// trivial and the descent stops with [`Error::TrivialDisk`].  Otherwise
/// the first innermost (s)-set contained in the side is returned.
pub fn descend_to_s_disk(
    view: &EmbeddedView,
    cycle: &XCycle,
    side_region: usize,
) -> Result<SSet> {
    let sub = cycle_subview(view, cycle);
    if side_region >= sub.n_regions {
        return Err(Error::InvalidInput(format!(
            "cycle side {side_region} out of range ({} regions)",
            sub.n_regions
        )));
    }
    let inside = sub.vertices_inside(side_region);
    if inside.iter().all(|&v| view.fat_signs[v] == cycle.sign) {
        return Err(Error::TrivialDisk(format!(
            "side {side_region} of the cycle on {:?} holds only sign {} vertices",
            cycle.vertices, cycle.sign
        )));
    }
    let inside: BTreeSet<usize> = inside.into_iter().collect();
    find_s_sets(view)
        .into_iter()
        .find(|s| s.innermost && s.vertices.is_subset(&inside))
        .ok_or_else(|| {
            Error::InvalidInput(format!(
                "no innermost set inside side {side_region} of the cycle on {:?}",
                cycle.vertices
            ))
        })
}

/// An edge directed from its tail slot to its head slot.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DirectedEdge {
    /// The edge id.
    pub edge: usize,
    /// The slot in the source label set.
    pub tail: Slot,
    /// The slot in the target label set.
    pub head: Slot,
}

/// The classification of one component spanned by `[V, W]` edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ComponentCertificate {
    /// A same-sign tree containing exactly one special vertex.
    TreeToRoot {
        /// The special vertex the tree hangs off.
        root: usize,
        /// The component's vertices, ascending.
        vertices: Vec<usize>,
        /// The component's directed edges.
        edges: Vec<DirectedEdge>,
        /// The common vertex sign.
        sign: Sign,
    },
    /// A directed cycle through same-sign vertices.
    DirectedCycle {
        /// Cycle vertices in arc order, starting at the smallest.
        vertices: Vec<usize>,
        /// The arcs walked, `edges[i]` leaving `vertices[i]`.
        edges: Vec<DirectedEdge>,
        /// The common sign of the cycle's vertices.
        sign: Sign,
    },
    /// Neither shape fits; carries the component and the reason.
    Other {
        /// The component's vertices, ascending.
        vertices: Vec<usize>,
        /// The component's directed edges.
        edges: Vec<DirectedEdge>,
        /// Why no certificate applies.
        reason: String,
    },
}

/// Classifies the components spanned by edges running between label sets
/// `v_labels` and `w_labels` on `side`, each edge directed from its
/// `v_labels` end to its `w_labels` end.
///
/// Components are reported in order of their smallest vertex.  The label
/// sets must be disjoint and in range.
pub fn trees_or_cycles(
    pair: &IntersectionPair,
    side: Side,
    v_labels: &BTreeSet<usize>,
    w_labels: &BTreeSet<usize>,
) -> Result<Vec<ComponentCertificate>> {
    let view = pair.view(side);
    if !v_labels.is_disjoint(w_labels) {
        return Err(Error::InvalidInput(
            "the two label sets must be disjoint".into(),
        ));
    }
    if let Some(x) = v_labels
        .iter()
        .chain(w_labels.iter())
        .find(|&&x| x >= view.n_labels)
    {
        return Err(Error::InvalidInput(format!(
            "label {x} out of range ({} labels)",
            view.n_labels
        )));
    }

    let mut arcs: Vec<DirectedEdge> = Vec::new();
    for e in 0..view.n_edges() {
        let (a, b) = view.edge_slots(e);
        if v_labels.contains(&a.x) && w_labels.contains(&b.x) {
            arcs.push(DirectedEdge {
                edge: e,
                tail: a,
                head: b,
            });
        } else if v_labels.contains(&b.x) && w_labels.contains(&a.x) {
            arcs.push(DirectedEdge {
                edge: e,
                tail: b,
                head: a,
            });
        }
    }

    // Components over the arc endpoints.
    let n = view.n_fat;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let root = find(parent, parent[v]);
            parent[v] = root;
        }
        parent[v]
    }
    for a in &arcs {
        let rt = find(&mut parent, a.tail.v);
        let rh = find(&mut parent, a.head.v);
        parent[rt] = rh;
    }
    let mut roots: Vec<usize> = arcs
        .iter()
        .map(|a| find(&mut parent, a.tail.v))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    // Order components by their smallest member.
    let smallest = |root: usize, parent: &mut Vec<usize>| -> usize {
        (0..n)
            .filter(|&v| find(parent, v) == root)
            .min()
            .unwrap()
    };
    roots.sort_by_key(|&r| smallest(r, &mut parent));

    let mut out = Vec::new();
    for root in roots {
        let vertices: Vec<usize> = (0..n)
            .filter(|&v| find(&mut parent, v) == root)
            .filter(|&v| {
                arcs.iter().any(|a| a.tail.v == v || a.head.v == v)
            })
            .collect();
        let edges: Vec<DirectedEdge> = arcs
            .iter()
            .filter(|a| find(&mut parent, a.tail.v) == root)
            .copied()
            .collect();
        let sign = view.fat_signs[vertices[0]];
        let uniform = vertices.iter().all(|&v| view.fat_signs[v] == sign);
        if edges.len() + 1 == vertices.len() {
            // Connected and acyclic: a tree.
            if !uniform {
                out.push(ComponentCertificate::Other {
                    vertices,
                    edges,
                    reason: "tree on mixed-sign vertices".into(),
                });
                continue;
            }
            let specials: Vec<usize> = vertices
                .iter()
                .copied()
                .filter(|v| SPECIAL_VERTICES.contains(v))
                .collect();
            match specials.as_slice() {
                [root] => out.push(ComponentCertificate::TreeToRoot {
                    root: *root,
                    vertices,
                    edges,
                    sign,
                }),
                [] => out.push(ComponentCertificate::Other {
                    vertices,
                    edges,
                    reason: "tree without a special vertex".into(),
                }),
                _ => out.push(ComponentCertificate::Other {
                    vertices,
                    edges,
                    reason: "tree through both special vertices".into(),
                }),
            }
        } else {
            // Carries a cycle; look for a uniform-sign directed one.
            match find_uniform_directed_cycle(view, &edges) {
                Some((cyc_vertices, cyc_edges)) => {
                    let sign = view.fat_signs[cyc_vertices[0]];
                    out.push(ComponentCertificate::DirectedCycle {
                        vertices: cyc_vertices,
                        edges: cyc_edges,
                        sign,
                    });
                }
                None => out.push(ComponentCertificate::Other {
                    vertices,
                    edges,
                    reason: "cyclic component without a uniform-sign directed cycle".into(),
                }),
            }
        }
    }
    Ok(out)
}

/// A directed cycle through same-sign vertices among `arcs`, if any.
///
/// Returns the cycle's vertices (arc order, starting at the smallest)
/// and the arcs walked.
fn find_uniform_directed_cycle(
    view: &EmbeddedView,
    arcs: &[DirectedEdge],
) -> Option<(Vec<usize>, Vec<DirectedEdge>)> {
    for sign in [Sign::Plus, Sign::Minus] {
        let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); view.n_fat];
        let mut verts: BTreeSet<usize> = BTreeSet::new();
        for (i, a) in arcs.iter().enumerate() {
            if view.fat_signs[a.tail.v] == sign && view.fat_signs[a.head.v] == sign {
                out_arcs[a.tail.v].push(i);
                verts.insert(a.tail.v);
                verts.insert(a.head.v);
            }
        }
        // Tri-color depth-first search with an explicit stack; a gray
        // target closes a cycle.
        let mut color = vec![0u8; view.n_fat]; // 0 white, 1 gray, 2 black
        for &start in &verts {
            if color[start] != 0 {
                continue;
            }
            // Stack entries: (vertex, next out-arc index, arc that led here).
            let mut stack: Vec<(usize, usize, Option<usize>)> = vec![(start, 0, None)];
            color[start] = 1;
            while let Some(&(v, i, _)) = stack.last() {
                if i >= out_arcs[v].len() {
                    color[v] = 2;
                    stack.pop();
                    continue;
                }
                stack.last_mut().unwrap().1 += 1;
                let arc_id = out_arcs[v][i];
                let t = arcs[arc_id].head.v;
                if color[t] == 1 {
                    // Unwind the stack from t to v, then close with arc_id.
                    let pos = stack.iter().position(|&(u, _, _)| u == t).unwrap();
                    let mut cyc_vertices: Vec<usize> = Vec::new();
                    let mut cyc_arcs: Vec<DirectedEdge> = Vec::new();
                    for j in pos..stack.len() {
                        cyc_vertices.push(stack[j].0);
                        if j + 1 < stack.len() {
                            cyc_arcs.push(arcs[stack[j + 1].2.unwrap()]);
                        }
                    }
                    cyc_arcs.push(arcs[arc_id]);
                    // Rotate to start at the smallest vertex.
                    let k = cyc_vertices
                        .iter()
                        .enumerate()
                        .min_by_key(|&(_, &v)| v)
                        .map(|(i, _)| i)
                        .unwrap();
                    cyc_vertices.rotate_left(k);
                    cyc_arcs.rotate_left(k);
                    return Some((cyc_vertices, cyc_arcs));
                }
                if color[t] == 0 {
                    color[t] = 1;
                    stack.push((t, 0, Some(arc_id)));
                }
            }
        }
    }
    None
}

/// Label sets swept on the two vertex signs around one single-walk region
/// of a Scharlemann cycle's edge set in the cross graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaCheck {
    /// The Scharlemann cycle's label on its own side.
    pub cycle_x: usize,
    /// The Scharlemann cycle's vertices on its own side.
    pub cycle_vertices: Vec<usize>,
    /// The cross-side region examined.
    pub region: usize,
    /// Labels swept by corners at negative cross-side vertices.
    pub negative_labels: BTreeSet<usize>,
    /// Labels swept by corners at positive cross-side vertices.
    pub positive_labels: BTreeSet<usize>,
    /// The two label sets are disjoint.
    pub disjoint: bool,
}

/// For every Scharlemann cycle on `side`, sweeps the corner labels of
/// each single-walk region of its edge set on the other side, split by
/// vertex sign.
pub fn delta_label_sides(pair: &IntersectionPair, side: Side) -> Vec<DeltaCheck> {
    let view = pair.view(side);
    let other = pair.view(side.other());
    let mut out = Vec::new();
    for cycle in all_x_cycles(view).into_iter().filter(|c| c.scharlemann) {
        let edges: BTreeSet<usize> = cycle.edges.iter().copied().collect();
        let sub = other.edge_subview(&edges);
        for r in 0..sub.n_regions {
            if sub.walks_of_region(r).len() != 1 {
                continue;
            }
            let w = sub.walks_of_region(r)[0];
            let mut negative_labels = BTreeSet::new();
            let mut positive_labels = BTreeSet::new();
            for c in sub.corners_of_walk(w) {
                let bucket = match other.fat_signs[c.vertex] {
                    Sign::Plus => &mut positive_labels,
                    Sign::Minus => &mut negative_labels,
                };
                let (start, count) = sub.corner_arcs(&c);
                for j in 0..=count {
                    bucket.insert(sub.view.label_at_pos(c.vertex, (start + j) % other.n_labels));
                }
            }
            let disjoint = negative_labels.is_disjoint(&positive_labels);
            out.push(DeltaCheck {
                cycle_x: cycle.x,
                cycle_vertices: cycle.vertices.clone(),
                region: r,
                negative_labels,
                positive_labels,
                disjoint,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{canonical_signs, collect_pairs};
    use crate::pair::RawPair;

    fn loop_pair() -> IntersectionPair {
        let raw: RawPair = serde_json::from_str(
            r#"{ "p": 2, "q": 2, "signsP": ["+","-"], "signsQ": ["+","-"],
                 "matching": [[[1,1],[1,2]], [[2,1],[2,2]]] }"#,
        )
        .unwrap();
        IntersectionPair::from_raw(&raw).unwrap()
    }

    fn cross_pair() -> IntersectionPair {
        let raw: RawPair = serde_json::from_str(
            r#"{ "p": 2, "q": 2, "signsP": ["+","-"], "signsQ": ["+","-"],
                 "matching": [[[1,1],[2,1]], [[1,2],[2,2]]] }"#,
        )
        .unwrap();
        IntersectionPair::from_raw(&raw).unwrap()
    }

    /// Every edge of the cross pair joins antiparallel vertices, so no
    /// label carries an x-cycle and every vertex is isolated.
    #[test]
    fn antiparallel_graphs_have_no_cycles_and_all_isolated() {
        let pair = cross_pair();
        let view = pair.view(Side::P);
        for x in 0..view.n_labels {
            assert!(find_x_cycles(view, x).is_empty());
        }
        assert_eq!(isolated_vertices(view), vec![0, 1]);
        // The loop pair's P side has only parallel edges: nothing isolated.
        let pair = loop_pair();
        assert!(isolated_vertices(pair.view(Side::P)).is_empty());
        // Its Q side joins the two vertices by antiparallel edges.
        assert_eq!(isolated_vertices(pair.view(Side::Q)), vec![0, 1]);
    }

    /// Each loop of the loop pair's P side is an x-cycle at both labels,
    /// with an empty side: an order-1 Scharlemann cycle on the adjacent
    /// pair (0, 1).  All four agree, so the census is consistent.
    #[test]
    fn loops_are_order_one_scharlemann_cycles() {
        let pair = loop_pair();
        let view = pair.view(Side::P);
        let cycles = all_x_cycles(view);
        assert_eq!(cycles.len(), 4);
        for c in &cycles {
            assert_eq!(c.order, 1);
            assert!(c.great);
            assert!(c.scharlemann);
            assert!(!c.new);
            assert_eq!(c.label_pair, Some((0, 1)));
            assert!(c.empty_region.is_some());
        }
        let report = scharlemann_consistency(view);
        assert_eq!(report.cycles.len(), 4);
        assert!(report.consistent, "{:?}", report.note);
    }

    /// Descending from the nontrivial side of the loop on vertex 0 finds
    /// the innermost set {1}; the empty side is a trivial disk.
    #[test]
    fn descent_finds_the_innermost_set_or_reports_triviality() {
        let pair = loop_pair();
        let view = pair.view(Side::P);
        let cycle = find_x_cycles(view, 0)
            .into_iter()
            .find(|c| c.vertices == vec![0])
            .unwrap();
        let sub = cycle_subview(view, &cycle);
        let sides: Vec<Vec<usize>> = (0..sub.n_regions).map(|r| sub.vertices_inside(r)).collect();
        let far = (0..sub.n_regions).find(|&r| sides[r] == vec![1]).unwrap();
        let empty = (0..sub.n_regions).find(|&r| sides[r].is_empty()).unwrap();
        let sset = descend_to_s_disk(view, &cycle, far).unwrap();
        assert_eq!(sset.vertices, BTreeSet::from([1]));
        assert!(sset.innermost);
        assert!(matches!(
            descend_to_s_disk(view, &cycle, empty),
            Err(Error::TrivialDisk(_))
        ));
    }

    /// (s)-sets are the components of the same-sign adjacency; loops keep
    /// a singleton non-isolated, and bare singletons leave at every label.
    #[test]
    fn s_sets_are_same_sign_components() {
        let pair = loop_pair();
        let sets = find_s_sets(pair.view(Side::P));
        assert_eq!(sets.len(), 2);
        for s in &sets {
            assert_eq!(s.vertices.len(), 1);
            assert!(s.leaving_edges.is_empty());
            assert!(s.leave_labels.is_empty());
            assert!(s.innermost, "a lone loop component is innermost");
            let flags = s_disk_flags(&pair, Side::P, s);
            assert!(!flags.size_ok, "singletons get flagged");
        }
        let pair = cross_pair();
        let sets = find_s_sets(pair.view(Side::P));
        assert_eq!(sets.len(), 2);
        for s in &sets {
            assert_eq!(s.leaving_edges.len(), 2);
            assert_eq!(s.leave_labels, BTreeSet::from([0, 1]));
        }
    }

    /// Web search: the loop pair's singletons are 0-webs; the cross
    /// pair's singletons are 2-webs (both edges leave).
    #[test]
    fn webs_require_the_exact_leaving_count_and_one_region() {
        let pair = loop_pair();
        let webs = find_great_webs(pair.view(Side::P), 0).unwrap();
        assert_eq!(webs.len(), 2);
        assert!(find_great_webs(pair.view(Side::P), 1).unwrap().is_empty());
        let pair = cross_pair();
        let webs = find_great_webs(pair.view(Side::P), 2).unwrap();
        assert_eq!(webs.len(), 2);
        for w in &webs {
            assert_eq!(w.vertices.len(), 1);
            assert_eq!(w.m, 2);
        }
        assert!(find_great_webs(pair.view(Side::P), 0).unwrap().is_empty());
    }

    /// An independent path-following oracle over the small corpus: for
    /// every instance and label, walking the functional map from each
    /// vertex and keeping the uniform-sign loops reproduces the detector.
    #[test]
    fn detector_agrees_with_path_following_oracle() {
        let pairs = collect_pairs(2, 4, &canonical_signs(2), &canonical_signs(4), None).unwrap();
        assert_eq!(pairs.len(), 6);
        for pair in &pairs {
            for side in [Side::P, Side::Q] {
                let view = pair.view(side);
                for x in 0..view.n_labels {
                    let mut expected: BTreeSet<Vec<usize>> = BTreeSet::new();
                    for start in 0..view.n_fat {
                        // Walk n_fat steps to reach the orbit's cycle.
                        let mut v = start;
                        for _ in 0..view.n_fat {
                            v = far_endpoint(view, Slot { v, x }).v;
                        }
                        // Collect the cycle through v.
                        let mut cyc = vec![v];
                        let mut u = far_endpoint(view, Slot { v, x }).v;
                        while u != v {
                            cyc.push(u);
                            u = far_endpoint(view, Slot { v: u, x }).v;
                        }
                        let sign = view.fat_signs[cyc[0]];
                        if cyc.iter().any(|&w| view.fat_signs[w] != sign) {
                            continue;
                        }
                        let k = cyc
                            .iter()
                            .enumerate()
                            .min_by_key(|&(_, &w)| w)
                            .map(|(i, _)| i)
                            .unwrap();
                        cyc.rotate_left(k);
                        // Drop the forth-and-back walk over one edge.
                        if cyc.len() == 2
                            && view.dart_at(Slot { v: cyc[0], x }) / 2
                                == view.dart_at(Slot { v: cyc[1], x }) / 2
                        {
                            continue;
                        }
                        expected.insert(cyc);
                    }
                    let got: BTreeSet<Vec<usize>> = find_x_cycles(view, x)
                        .into_iter()
                        .map(|c| c.vertices)
                        .collect();
                    assert_eq!(got, expected);
                }
            }
        }
    }

    /// Head labels of an x-cycle have the opposite parity of `x`, because
    /// characters alternate across each edge and signs agree around the
    /// cycle.
    #[test]
    fn cycle_head_labels_have_opposite_parity() {
        let pairs = collect_pairs(4, 4, &canonical_signs(4), &canonical_signs(4), None).unwrap();
        let mut seen = 0;
        for pair in &pairs {
            for side in [Side::P, Side::Q] {
                let view = pair.view(side);
                for c in all_x_cycles(view) {
                    seen += 1;
                    for &v in &c.vertices {
                        let head = far_endpoint(view, Slot { v, x: c.x });
                        assert_eq!(
                            view.label_parities[head.x],
                            -view.label_parities[c.x],
                            "head parity must oppose the cycle label's parity"
                        );
                    }
                }
            }
        }
        assert!(seen > 0, "the corpus should contain x-cycles");
    }

    /// A uniform-sign set with no edges leaving at some label must carry
    /// an x-cycle at that label within itself.
    #[test]
    fn no_leaving_edges_at_a_label_forces_a_cycle_within() {
        let pairs = collect_pairs(2, 4, &canonical_signs(2), &canonical_signs(4), None).unwrap();
        for pair in &pairs {
            for side in [Side::P, Side::Q] {
                let view = pair.view(side);
                for sign in [Sign::Plus, Sign::Minus] {
                    let class: Vec<usize> = (0..view.n_fat)
                        .filter(|&v| view.fat_signs[v] == sign)
                        .collect();
                    for mask in 1usize..(1 << class.len()) {
                        let verts: BTreeSet<usize> = class
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| mask & (1 << i) != 0)
                            .map(|(_, &v)| v)
                            .collect();
                        for x in 0..view.n_labels {
                            let leaves_at_x = verts.iter().any(|&v| {
                                let far = far_endpoint(view, Slot { v, x });
                                !verts.contains(&far.v)
                            });
                            if leaves_at_x {
                                continue;
                            }
                            assert!(
                                find_x_cycles(view, x)
                                    .iter()
                                    .any(|c| c.vertices.iter().all(|v| verts.contains(v))),
                                "a set with no label-{x} exits must hold a label-{x} cycle"
                            );
                        }
                    }
                }
            }
        }
    }

    /// The incidence properties are dual across the two sides: `A` of
    /// `(V, L)` on one side is `P` of `(L, V)` on the other.
    #[test]
    fn property_a_is_property_p_transposed() {
        let pairs = collect_pairs(2, 4, &canonical_signs(2), &canonical_signs(4), None).unwrap();
        for pair in &pairs {
            for side in [Side::P, Side::Q] {
                let view = pair.view(side);
                let n_v = view.n_fat;
                let n_l = view.n_labels;
                for vmask in 0usize..(1 << n_v) {
                    let vset: BTreeSet<usize> =
                        (0..n_v).filter(|&v| vmask & (1 << v) != 0).collect();
                    for lmask in 0usize..(1 << n_l) {
                        let lset: BTreeSet<usize> =
                            (0..n_l).filter(|&x| lmask & (1 << x) != 0).collect();
                        let a_here = property_a(view, &vset, &lset);
                        let p_there = property_p(pair.view(side.other()), &lset, &vset);
                        assert_eq!(a_here, p_there);
                    }
                }
            }
        }
        // Vacuous edge: with no labels, A holds and P fails for nonempty V.
        let pair = cross_pair();
        let view = pair.view(Side::P);
        let vset = BTreeSet::from([0]);
        let empty = BTreeSet::new();
        assert!(property_a(view, &vset, &empty));
        assert!(!property_p(view, &vset, &empty));
    }

    /// Loop edges span both labels, so {0} versus {1} turns each loop
    /// into a one-vertex directed cycle; the cross pair's edges stay
    /// within one label and qualify nowhere.
    #[test]
    fn label_set_edges_classify_into_certificates() {
        let pair = loop_pair();
        let v: BTreeSet<usize> = BTreeSet::from([0]);
        let w: BTreeSet<usize> = BTreeSet::from([1]);
        let certs = trees_or_cycles(&pair, Side::P, &v, &w).unwrap();
        assert_eq!(certs.len(), 2);
        for c in &certs {
            match c {
                ComponentCertificate::DirectedCycle { vertices, edges, .. } => {
                    assert_eq!(vertices.len(), 1);
                    assert_eq!(edges.len(), 1);
                    assert_eq!(edges[0].tail.v, vertices[0]);
                    assert_eq!(edges[0].head.v, vertices[0]);
                }
                other => panic!("expected a directed cycle, got {other:?}"),
            }
        }
        let pair = cross_pair();
        let certs = trees_or_cycles(&pair, Side::P, &v, &w).unwrap();
        assert!(certs.is_empty());
        assert!(matches!(
            trees_or_cycles(&pair, Side::P, &v, &v),
            Err(Error::InvalidInput(_))
        ));
    }

    /// Certificate soundness over the corpus: acyclic components have one
    /// more vertex than edges, directed cycles chain tail to head, and
    /// trees hang off exactly one special vertex.
    #[test]
    fn certificates_are_sound_over_the_corpus() {
        let pairs = collect_pairs(2, 4, &canonical_signs(2), &canonical_signs(4), None).unwrap();
        for pair in &pairs {
            for side in [Side::P, Side::Q] {
                let view = pair.view(side);
                let n_l = view.n_labels;
                for vmask in 1usize..(1 << n_l) {
                    for wmask in 1usize..(1 << n_l) {
                        if vmask & wmask != 0 {
                            continue;
                        }
                        let v: BTreeSet<usize> =
                            (0..n_l).filter(|&x| vmask & (1 << x) != 0).collect();
                        let w: BTreeSet<usize> =
                            (0..n_l).filter(|&x| wmask & (1 << x) != 0).collect();
                        for cert in trees_or_cycles(pair, side, &v, &w).unwrap() {
                            match cert {
                                ComponentCertificate::TreeToRoot {
                                    root,
                                    vertices,
                                    edges,
                                    sign,
                                } => {
                                    assert_eq!(edges.len() + 1, vertices.len());
                                    assert!(SPECIAL_VERTICES.contains(&root));
                                    assert!(vertices.contains(&root));
                                    assert!(vertices
                                        .iter()
                                        .all(|&u| view.fat_signs[u] == sign));
                                }
                                ComponentCertificate::DirectedCycle {
                                    vertices,
                                    edges,
                                    sign,
                                } => {
                                    assert_eq!(vertices.len(), edges.len());
                                    for (i, e) in edges.iter().enumerate() {
                                        assert_eq!(e.tail.v, vertices[i]);
                                        assert_eq!(
                                            e.head.v,
                                            vertices[(i + 1) % vertices.len()]
                                        );
                                        assert!(v.contains(&e.tail.x));
                                        assert!(w.contains(&e.head.x));
                                    }
                                    assert!(vertices
                                        .iter()
                                        .all(|&u| view.fat_signs[u] == sign));
                                }
                                ComponentCertificate::Other { vertices, edges, .. } => {
                                    // Acyclic rejects still satisfy the count.
                                    if edges.len() + 1 == vertices.len() {
                                        continue;
                                    }
                                    assert!(edges.len() >= vertices.len());
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    /// Corner label sides of a Scharlemann cycle's edge set: the loop
    /// pair's P side has four order-1 cycles whose single edge spans both
    /// labels of the two-vertex Q side.
    #[test]
    fn delta_checks_cover_single_walk_regions() {
        let pair = loop_pair();
        let checks = delta_label_sides(&pair, Side::P);
        assert!(!checks.is_empty());
        for c in &checks {
            assert!(
                c.disjoint == c.negative_labels.is_disjoint(&c.positive_labels),
                "flag must match the sets"
            );
        }
    }
}
