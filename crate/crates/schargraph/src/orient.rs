//! Dual-orientation engine: orienting subgraphs from stars, classifying
//! slots/edges/faces, face reversal, two-coloring, the rotation-free graph,
//! boundary indices, and index witnesses.
//!
//! An [`OrientedView`] is a subgraph together with one radial direction per
//! *position arc*: the arc between consecutive rotation positions of each
//! fat vertex.  Position order is traversal (counterclockwise) order, so
//! flank reading needs no sign adjustment.  A star `T` induces an
//! orientation on the subgraph of edges meeting its label set: vertices of
//! the star's sign copy the star's arc directions, vertices of the opposite
//! sign copy their reverses.
//!
//! On top of the arc table this module provides:
//!
//! * slot classification (anticlockwise/clockwise switch or plain) and the
//!   induced edge classes — *switch edges* (both endpoint slots switches of
//!   the same kind) and *negative edges* (all four flanking arcs equal);
//! * face direction (`Out`/`In` when every boundary arc of a region agrees)
//!   and representing faces (disk faces with a direction);
//! * `Rev`: reversing all arcs in the corners of selected regions;
//! * two-coloring of the faces of an even-degree subgraph, and the
//!   rotation-free graph `RF` obtained by reversing the black faces of the
//!   switch-edge coloring;
//! * boundary indices of faces of further subgraphs (corner index
//!   `1 - switches`, edge index `-1`/`0` by near-arc agreement) and the
//!   index-witness search (switch edge, directed face, or uniform fat
//!   vertex inside a nonpositive-index disk face);
//! * dual-vertex indices and the summary statistics used by the
//!   switch-count conditions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::combmap::{twin, Corner};
use crate::corner::{CornerProfile, CornerSlotKind};
use crate::error::{Error, Result};
use crate::pair::Slot;
use crate::sign::Dir;
use crate::star::Star;
use crate::view::{EmbeddedView, SubView};

/// A face color in a two-coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// A subgraph with one radial direction per position arc of each vertex.
#[derive(Clone, Debug)]
pub struct OrientedView<'a> {
    /// The underlying subgraph.
    pub sub: SubView<'a>,
    /// `arc[v][p]` is the direction of the arc between rotation positions
    /// `p` and `p + 1 (mod m)` at vertex `v`.  Rows of deleted vertices are
    /// never read.
    pub arc: Vec<Vec<Dir>>,
}

/// Orients the subgraph of edges meeting the star's labels (on the side
/// whose labels the star speaks about).  The star must have exactly one
/// arc value per ambient label of the view.
pub fn orient_label_subgraph<'a>(view: &'a EmbeddedView, star: &Star) -> Result<OrientedView<'a>> {
    if star.m() != view.n_labels {
        return Err(Error::InvalidInput(format!(
            "star on {} labels cannot orient a side with {} labels",
            star.m(),
            view.n_labels
        )));
    }
    let labels: BTreeSet<usize> = star.labels().iter().copied().collect();
    let sub = view.label_subview(&labels);
    Ok(OrientedView { arc: induced_arcs(view, star), sub })
}

/// The arc table a star induces on every vertex of a view.
fn induced_arcs(view: &EmbeddedView, star: &Star) -> Vec<Vec<Dir>> {
    (0..view.n_fat)
        .map(|v| {
            let flip = view.fat_signs[v] != star.sign();
            (0..view.n_labels)
                .map(|p| {
                    let d = star.omega_at_arc(view.arc_start_label(v, p));
                    if flip {
                        d.flip()
                    } else {
                        d
                    }
                })
                .collect()
        })
        .collect()
}

impl<'a> OrientedView<'a> {
    pub fn view(&self) -> &'a EmbeddedView {
        self.sub.view
    }

    fn m(&self) -> usize {
        self.view().n_labels
    }

    /// The two arcs flanking slot `s` in traversal order: `(previous, next)`.
    pub fn flanks(&self, s: Slot) -> (Dir, Dir) {
        let m = self.m();
        let pos = self.view().pos_of_label(s.v, s.x);
        (self.arc[s.v][(pos + m - 1) % m], self.arc[s.v][pos])
    }

    /// Switch classification of a slot.
    pub fn slot_kind(&self, s: Slot) -> CornerSlotKind {
        match self.flanks(s) {
            (Dir::Out, Dir::In) => CornerSlotKind::Anticlockwise,
            (Dir::In, Dir::Out) => CornerSlotKind::Clockwise,
            _ => CornerSlotKind::Plain,
        }
    }

    /// The common flanking direction of a plain slot.
    pub fn phi_slot(&self, s: Slot) -> Option<Dir> {
        match self.flanks(s) {
            (Dir::Out, Dir::Out) => Some(Dir::Out),
            (Dir::In, Dir::In) => Some(Dir::In),
            _ => None,
        }
    }

    /// The switch kind a kept edge carries: both endpoint slots must be
    /// switches of the same kind.
    pub fn switch_edge_kind(&self, e: usize) -> Option<CornerSlotKind> {
        let (a, b) = self.view().edge_slots(e);
        let (ka, kb) = (self.slot_kind(a), self.slot_kind(b));
        if ka == kb && ka != CornerSlotKind::Plain {
            Some(ka)
        } else {
            None
        }
    }

    pub fn is_switch_edge(&self, e: usize) -> bool {
        self.switch_edge_kind(e).is_some()
    }

    /// A kept edge is negative when all four arcs flanking its two
    /// endpoint slots point the same way.
    pub fn is_negative_edge(&self, e: usize) -> bool {
        let (a, b) = self.view().edge_slots(e);
        match (self.phi_slot(a), self.phi_slot(b)) {
            (Some(da), Some(db)) => da == db,
            _ => false,
        }
    }

    /// Kept switch edges, ascending.
    pub fn switch_edges(&self) -> Vec<usize> {
        (0..self.view().n_edges())
            .filter(|&e| self.sub.kept_edge[e] && self.is_switch_edge(e))
            .collect()
    }

    /// Kept-dart slots carrying switches of the given kind, in slot order.
    pub fn switch_slots(&self, kind: CornerSlotKind) -> Vec<Slot> {
        let mut out = Vec::new();
        for v in 0..self.view().n_fat {
            if !self.sub.kept_vertex[v] {
                continue;
            }
            for x in 0..self.m() {
                let s = Slot { v, x };
                if self.sub.kept_edge[self.view().dart_at(s) / 2] && self.slot_kind(s) == kind {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Kept vertices whose arcs all point the same way (fat sinks/sources).
    pub fn uniform_vertices(&self) -> Vec<usize> {
        (0..self.view().n_fat)
            .filter(|&v| {
                self.sub.kept_vertex[v] && self.arc[v].iter().all(|&d| d == self.arc[v][0])
            })
            .collect()
    }

    /// The corner profile of a corner of `sub` (a subgraph of this view's
    /// graph on the same parent), read from this orientation.
    pub fn corner_profile(&self, sub: &SubView, c: &Corner) -> CornerProfile {
        debug_assert!(std::ptr::eq(sub.view, self.view()));
        let m = self.m();
        let (start, count) = sub.corner_arcs(c);
        let arcs = (0..count).map(|j| self.arc[c.vertex][(start + j) % m]).collect();
        let interior = sub
            .corner_interior_slots(c)
            .iter()
            .map(|s| self.view().char_of(*s))
            .collect();
        let arr = self.view().char_of(self.view().slot_of(c.arrive));
        let dep = self.view().char_of(self.view().slot_of(c.depart));
        CornerProfile::new(arr, dep, interior, arcs)
    }

    /// The uniform direction of a corner of `sub`, if its arcs agree.
    pub fn corner_dir(&self, sub: &SubView, c: &Corner) -> Option<Dir> {
        let m = self.m();
        let (start, count) = sub.corner_arcs(c);
        let first = self.arc[c.vertex][start % m];
        (1..count)
            .all(|j| self.arc[c.vertex][(start + j) % m] == first)
            .then_some(first)
    }

    /// All arc directions bounding region `r` of this view's subgraph:
    /// corner arcs along its walks plus the full circles of floating
    /// vertices inside it.
    fn region_arc_dirs(&self, r: usize) -> Vec<Dir> {
        let m = self.m();
        let mut out = Vec::new();
        for &w in self.sub.walks_of_region(r) {
            for c in self.sub.corners_of_walk(w) {
                let (start, count) = self.sub.corner_arcs(&c);
                out.extend((0..count).map(|j| self.arc[c.vertex][(start + j) % m]));
            }
        }
        for v in self.sub.floating_in(r) {
            out.extend(self.arc[v].iter().copied());
        }
        out
    }

    /// The direction of a face all of whose bounding arcs agree.
    pub fn face_dir(&self, r: usize) -> Option<Dir> {
        let dirs = self.region_arc_dirs(r);
        let (&first, rest) = dirs.split_first()?;
        rest.iter().all(|&d| d == first).then_some(first)
    }

    /// Disk faces whose bounding arcs all agree (sink or source faces).
    pub fn representing_regions(&self) -> Vec<usize> {
        self.sub
            .disk_regions()
            .into_iter()
            .filter(|&r| self.face_dir(r).is_some())
            .collect()
    }

    /// Whether some disk face is a sink or source.
    pub fn is_representative(&self) -> bool {
        !self.representing_regions().is_empty()
    }

    /// Reverses all arcs belonging to the corners of the selected regions
    /// (including the circles of floating vertices inside them).
    pub fn reverse_regions(&self, regions: &BTreeSet<usize>) -> OrientedView<'a> {
        let m = self.m();
        let mut arc = self.arc.clone();
        for &r in regions {
            for &w in self.sub.walks_of_region(r) {
                for c in self.sub.corners_of_walk(w) {
                    let (start, count) = self.sub.corner_arcs(&c);
                    for j in 0..count {
                        let p = (start + j) % m;
                        arc[c.vertex][p] = arc[c.vertex][p].flip();
                    }
                }
            }
            for v in self.sub.floating_in(r) {
                for p in 0..m {
                    arc[v][p] = arc[v][p].flip();
                }
            }
        }
        OrientedView { sub: self.sub.clone(), arc }
    }

    /// The index of the boundary of region `r` of `sub` (a subgraph of
    /// this view's graph): corner indices `1 - switches` plus edge indices
    /// (`-1` when the arcs adjacent to the edge occurrence agree, else 0).
    pub fn boundary_index(&self, sub: &SubView, r: usize) -> i64 {
        debug_assert!(std::ptr::eq(sub.view, self.view()));
        let m = self.m();
        let mut total = 0i64;
        for &w in sub.walks_of_region(r) {
            let corners = sub.corners_of_walk(w);
            for c in &corners {
                let (start, count) = sub.corner_arcs(c);
                let switches = (1..count)
                    .filter(|&j| {
                        self.arc[c.vertex][(start + j - 1) % m]
                            != self.arc[c.vertex][(start + j) % m]
                    })
                    .count();
                total += 1 - switches as i64;
            }
            // One edge-index term per dart occurrence: the arc just before
            // the dart at its origin and the arc just after its twin at the
            // target are the face-side arcs adjacent to the edge.
            for &d in &sub.walks[w] {
                let near_tail = {
                    let pos = self.view().map.rotation_index(d);
                    self.arc[self.view().map.origin(d)][(pos + m - 1) % m]
                };
                let near_head = {
                    let t = twin(d);
                    let pos = self.view().map.rotation_index(t);
                    self.arc[self.view().map.origin(t)][pos]
                };
                if near_tail == near_head {
                    total -= 1;
                }
            }
        }
        total
    }

    /// Index of the dual vertex of a disk face: `1 - s/2` where `s` counts
    /// direction changes in the cyclic corner sequence.  Corners must be
    /// uniform.
    pub fn dual_vertex_index(&self, r: usize) -> i64 {
        debug_assert!(self.sub.is_disk(r));
        let walks = self.sub.walks_of_region(r);
        let mut dirs = Vec::new();
        for &w in walks {
            for c in self.sub.corners_of_walk(w) {
                dirs.push(
                    self.corner_dir(&self.sub, &c)
                        .expect("dual-vertex index needs uniform corners"),
                );
            }
        }
        let n = dirs.len();
        let s = (0..n).filter(|&i| dirs[i] != dirs[(i + 1) % n]).count();
        1 - (s as i64) / 2
    }

    /// Whether the graph has a directed closed walk in which every edge is
    /// traversed away from one of the given tail slots.
    pub fn has_directed_cycle_with_tails_at(&self, tails: &BTreeSet<Slot>) -> bool {
        let n = self.view().n_fat;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in 0..self.view().n_edges() {
            if !self.sub.kept_edge[e] {
                continue;
            }
            let (a, b) = self.view().edge_slots(e);
            if tails.contains(&a) {
                adj[a.v].push(b.v);
            }
            if tails.contains(&b) {
                adj[b.v].push(a.v);
            }
        }
        // Iterative DFS with tri-coloring; a back edge closes a cycle.
        let mut state = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            state[start] = 1;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if *next < adj[v].len() {
                    let w = adj[v][*next];
                    *next += 1;
                    match state[w] {
                        0 => {
                            state[w] = 1;
                            stack.push((w, 0));
                        }
                        1 => return true,
                        _ => {}
                    }
                } else {
                    state[v] = 2;
                    stack.pop();
                }
            }
        }
        false
    }

    /// Per-vertex counts of (clockwise, anticlockwise) switch-edge ends.
    pub fn switch_edge_end_counts(&self) -> Vec<(usize, usize)> {
        let mut counts = vec![(0usize, 0usize); self.view().n_fat];
        for e in 0..self.view().n_edges() {
            if !self.sub.kept_edge[e] {
                continue;
            }
            if let Some(kind) = self.switch_edge_kind(e) {
                let (a, b) = self.view().edge_slots(e);
                for s in [a, b] {
                    match kind {
                        CornerSlotKind::Clockwise => counts[s.v].0 += 1,
                        CornerSlotKind::Anticlockwise => counts[s.v].1 += 1,
                        CornerSlotKind::Plain => unreachable!(),
                    }
                }
            }
        }
        counts
    }
}

/// Two-colors the faces of a subgraph so that every kept edge has one
/// color on each side.  Requires every kept vertex to have even kept
/// degree.  The region containing parent face 0 is white; each remaining
/// adjacency component starts white at its smallest region id.
pub fn two_color(sub: &SubView) -> Result<Vec<Color>> {
    for v in 0..sub.view.n_fat {
        if sub.kept_vertex[v] && sub.kept_degree(v) % 2 != 0 {
            return Err(Error::OddDegree(format!(
                "vertex {} has odd degree {} in the subgraph to color",
                v + 1,
                sub.kept_degree(v)
            )));
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); sub.n_regions];
    for e in 0..sub.view.n_edges() {
        if !sub.kept_edge[e] {
            continue;
        }
        let (r1, r2) = (sub.region_beside(2 * e), sub.region_beside(2 * e + 1));
        adj[r1].push(r2);
        adj[r2].push(r1);
    }
    let mut color = vec![None; sub.n_regions];
    for start in 0..sub.n_regions {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(Color::White);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(r) = queue.pop_front() {
            let c = color[r].unwrap();
            for &s in &adj[r] {
                match color[s] {
                    None => {
                        color[s] = Some(c.flip());
                        queue.push_back(s);
                    }
                    Some(cs) => assert_ne!(
                        cs, c,
                        "even-degree subgraphs of the sphere are two-colorable"
                    ),
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.unwrap()).collect())
}

/// The pieces of the rotation-free construction for a star on a side.
pub struct RfParts<'a> {
    /// The star-induced orientation on the label subgraph.
    pub gamma: OrientedView<'a>,
    /// Its switch edges.
    pub switch_edges: Vec<usize>,
    /// Colors of the regions of the switch-edge subgraph.
    pub switch_coloring: Vec<Color>,
    /// Regions of the label subgraph that inherited black.
    pub black_regions: BTreeSet<usize>,
    /// The rotation-free orientation: black faces reversed.
    pub rf: OrientedView<'a>,
}

/// Builds the rotation-free graph of a star on a view: orients the label
/// subgraph, two-colors the faces of its switch-edge subgraph, pushes the
/// coloring down to the label subgraph's faces, and reverses the black
/// ones.
pub fn build_rf<'a>(view: &'a EmbeddedView, star: &Star) -> Result<RfParts<'a>> {
    let gamma = orient_label_subgraph(view, star)?;
    let switch_edges = gamma.switch_edges();
    let switch_sub = view.edge_subview(&switch_edges.iter().copied().collect());
    let switch_coloring = two_color(&switch_sub)?;
    let mut black_regions = BTreeSet::new();
    for r in 0..gamma.sub.n_regions {
        let faces = gamma.sub.parent_faces_in(r);
        let up = switch_sub.region_of_parent_face(faces[0]);
        debug_assert!(
            faces.iter().all(|&f| switch_sub.region_of_parent_face(f) == up),
            "finer regions lie inside one switch region"
        );
        if switch_coloring[up] == Color::Black {
            black_regions.insert(r);
        }
    }
    let rf = gamma.reverse_regions(&black_regions);
    Ok(RfParts { gamma, switch_edges, switch_coloring, black_regions, rf })
}

/// Summary statistics of an oriented label subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationStats {
    /// Half the switch count of the star, minus one.
    pub i: i64,
    /// Number of negative edges.
    pub u: usize,
    /// Number of disk faces that are sinks or sources.
    pub r: usize,
    /// Number of switch edges.
    pub s: usize,
    /// `r` minus the total dual-vertex index over disk faces.
    pub t: i64,
    /// Total dual-vertex index over disk faces.
    pub dual_index_sum: i64,
}

/// Computes the summary statistics of a star-induced orientation.
pub fn orientation_stats(gamma: &OrientedView, star: &Star) -> OrientationStats {
    let u = (0..gamma.view().n_edges())
        .filter(|&e| gamma.sub.kept_edge[e] && gamma.is_negative_edge(e))
        .count();
    let s = gamma.switch_edges().len();
    let disks = gamma.sub.disk_regions();
    let r = disks.iter().filter(|&&d| gamma.face_dir(d).is_some()).count();
    let dual_index_sum: i64 = disks.iter().map(|&d| gamma.dual_vertex_index(d)).sum();
    OrientationStats {
        i: star.s_set().len() as i64 / 2 - 1,
        u,
        r,
        s,
        t: r as i64 - dual_index_sum,
        dual_index_sum,
    }
}

/// A witness for a nonpositive-index disk face of a subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IndexWitness {
    /// A switch edge of the ambient orientation inside the face.
    SwitchEdge { edge: usize },
    /// A sink or source disk face of the ambient graph inside the face.
    DirectedFace { region: usize },
    /// A fat vertex inside the face with uniform dual orientation.
    UniformVertex { vertex: usize },
}

/// Searches a region of `sub` (a subgraph of `gamma`'s graph) for an
/// index witness: a switch edge of `gamma` strictly inside, a sink/source
/// disk face of `gamma` contained in the region, or a fat vertex strictly
/// inside whose arcs are uniform.
pub fn find_index_witness(gamma: &OrientedView, sub: &SubView, r: usize) -> Option<IndexWitness> {
    for e in sub.deleted_edges_inside(r) {
        if gamma.sub.kept_edge[e] && gamma.is_switch_edge(e) {
            return Some(IndexWitness::SwitchEdge { edge: e });
        }
    }
    for g in gamma.sub.disk_regions() {
        let faces = gamma.sub.parent_faces_in(g);
        if faces.iter().all(|&f| sub.region_of_parent_face(f) == r)
            && gamma.face_dir(g).is_some()
        {
            return Some(IndexWitness::DirectedFace { region: g });
        }
    }
    for v in sub.vertices_inside(r) {
        if gamma.arc[v].iter().all(|&d| d == gamma.arc[v][0]) {
            return Some(IndexWitness::UniformVertex { vertex: v });
        }
    }
    None
}

/// Endpoint labels of the label subgraph `G(L)` that lie outside `L`.
pub fn exceptional_labels(view: &EmbeddedView, labels: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for e in 0..view.n_edges() {
        let (a, b) = view.edge_slots(e);
        let touches = labels.contains(&a.x) || labels.contains(&b.x);
        if touches {
            for s in [a, b] {
                if !labels.contains(&s.x) {
                    out.insert(s.x);
                }
            }
        }
    }
    out
}

/// Labels at vertex `v` met by edges of the label subgraph `G(L)`.
pub fn labels_met_at(view: &EmbeddedView, labels: &BTreeSet<usize>, v: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for x in 0..view.n_labels {
        let e = view.dart_at(Slot { v, x }) / 2;
        let (a, b) = view.edge_slots(e);
        if labels.contains(&a.x) || labels.contains(&b.x) {
            out.push(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::IntersectionPair;
    use crate::pair::Side;
    use crate::sign::Dir::{In, Out};
    use crate::sign::Sign;
    use crate::sign::Sign::{Minus, Plus};

    /// Two parallel edges joining the two P-vertices (one per label).
    fn cross_pair() -> IntersectionPair {
        IntersectionPair::from_json(
            r#"{ "p": 2, "q": 2, "signsP": ["+","-"], "signsQ": ["+","-"],
                 "matching": [[[1,1],[2,1]], [[1,2],[2,2]]] }"#,
        )
        .unwrap()
    }

    /// A loop on each P-vertex (spanning both labels).
    fn loop_pair() -> IntersectionPair {
        IntersectionPair::from_json(
            r#"{ "p": 2, "q": 2, "signsP": ["+","-"], "signsQ": ["+","-"],
                 "matching": [[[1,1],[1,2]], [[2,1],[2,2]]] }"#,
        )
        .unwrap()
    }

    fn full_star(sign: Sign, omega: Vec<Dir>) -> Star {
        let m = omega.len();
        Star::new(sign, Star::standard_parities(m), (0..m).collect(), omega).unwrap()
    }

    #[test]
    fn induced_arcs_flip_on_opposite_sign() {
        let pair = cross_pair();
        let view = pair.view(Side::P);
        let t = full_star(Plus, vec![Out, In]);
        let gamma = orient_label_subgraph(view, &t).unwrap();
        // Vertex 0 is positive: copies the star (position p starts label p).
        assert_eq!(gamma.arc[0], vec![Out, In]);
        // Vertex 1 is negative: positions run the circle the other way and
        // arcs reverse.
        assert_eq!(gamma.arc[1][0], gamma.arc[1][1].flip());
    }

    #[test]
    fn slot_kind_uniform_per_label() {
        // For star-induced orientations the slot kind at a label does not
        // depend on the vertex sign.
        let pair = cross_pair();
        let view = pair.view(Side::P);
        for mask in 0..4u32 {
            let omega: Vec<Dir> =
                (0..2).map(|i| if mask >> i & 1 == 0 { Out } else { In }).collect();
            for sign in [Plus, Minus] {
                let t = full_star(sign, omega.clone());
                let gamma = orient_label_subgraph(view, &t).unwrap();
                for x in 0..2 {
                    let k0 = gamma.slot_kind(Slot { v: 0, x });
                    let k1 = gamma.slot_kind(Slot { v: 1, x });
                    assert_eq!(k0, k1);
                    if sign == Plus {
                        assert_eq!(k0, t.switch_kind(x), "matches the star's own calculus");
                    }
                }
            }
        }
    }

    #[test]
    fn reverse_regions_is_involutive_and_flips_faces() {
        let pair = cross_pair();
        let view = pair.view(Side::P);
        let t = full_star(Plus, vec![Out, In]);
        let gamma = orient_label_subgraph(view, &t).unwrap();
        let all: BTreeSet<usize> = (0..gamma.sub.n_regions).collect();
        let rev = gamma.reverse_regions(&all);
        for v in 0..2 {
            for p in 0..2 {
                assert_eq!(rev.arc[v][p], gamma.arc[v][p].flip());
            }
        }
        let back = rev.reverse_regions(&all);
        assert_eq!(back.arc, gamma.arc);
    }

    #[test]
    fn representativity_is_rev_invariant() {
        let pair = cross_pair();
        let view = pair.view(Side::P);
        for mask in 0..4u32 {
            let omega: Vec<Dir> =
                (0..2).map(|i| if mask >> i & 1 == 0 { Out } else { In }).collect();
            let t = full_star(Plus, omega);
            let gamma = orient_label_subgraph(view, &t).unwrap();
            for sel in 0..1u32 << gamma.sub.n_regions {
                let regions: BTreeSet<usize> =
                    (0..gamma.sub.n_regions).filter(|&r| sel >> r & 1 == 1).collect();
                let rev = gamma.reverse_regions(&regions);
                assert_eq!(gamma.is_representative(), rev.is_representative());
            }
        }
    }

    #[test]
    fn two_color_needs_even_degrees() {
        let pair = cross_pair();
        let view = pair.view(Side::P);
        // Keep a single edge: both endpoints get odd degree.
        let sub = view.edge_subview(&BTreeSet::from([1usize]));
        assert!(matches!(two_color(&sub), Err(Error::OddDegree(_))));
        // The full graph always has even degree (q per vertex).
        let full = view.full_subview();
        let colors = two_color(&full).unwrap();
        assert_eq!(colors[0], Color::White);
        for e in 0..view.n_edges() {
            assert_ne!(
                colors[full.region_beside(2 * e)],
                colors[full.region_beside(2 * e + 1)],
                "each edge separates the two colors"
            );
        }
    }

    #[test]
    fn conjugate_matches_black_face_reversal() {
        // Reversing the black faces of the fully two-colored graph induces
        // the conjugate star (up to the phase choice, i.e. up to bar).
        let pair = cross_pair();
        let view = pair.view(Side::P);
        for mask in 0..4u32 {
            let omega: Vec<Dir> =
                (0..2).map(|i| if mask >> i & 1 == 0 { Out } else { In }).collect();
            let t = full_star(Plus, omega);
            let gamma = orient_label_subgraph(view, &t).unwrap();
            let colors = two_color(&gamma.sub).unwrap();
            let blacks: BTreeSet<usize> = (0..gamma.sub.n_regions)
                .filter(|&r| colors[r] == Color::Black)
                .collect();
            let rev = gamma.reverse_regions(&blacks);
            let hat = t.conjugate().unwrap();
            let by_hat = orient_label_subgraph(view, &hat).unwrap();
            let by_bar_hat = orient_label_subgraph(view, &hat.bar()).unwrap();
            assert!(
                rev.arc == by_hat.arc || rev.arc == by_bar_hat.arc,
                "black-face reversal is star-induced by the conjugate"
            );
        }
    }

    #[test]
    fn rf_has_no_switch_edges_and_preserves_representativity() {
        let pair = cross_pair();
        let view = pair.view(Side::P);
        for mask in 0..4u32 {
            let omega: Vec<Dir> =
                (0..2).map(|i| if mask >> i & 1 == 0 { Out } else { In }).collect();
            let t = full_star(Plus, omega);
            let parts = build_rf(view, &t).unwrap();
            assert!(parts.rf.switch_edges().is_empty());
            assert_eq!(parts.gamma.is_representative(), parts.rf.is_representative());
        }
    }

    #[test]
    fn boundary_index_of_whole_disk_faces() {
        // For a region of the graph itself (subgraph = graph), corner
        // switches vanish inside unit corners and the index reduces to
        // corners + edge agreements.
        let pair = cross_pair();
        let view = pair.view(Side::P);
        let t = full_star(Plus, vec![Out, In]);
        let gamma = orient_label_subgraph(view, &t).unwrap();
        for r in gamma.sub.disk_regions() {
            let idx = gamma.boundary_index(&gamma.sub, r);
            // Walks of the full graph have unit corners: each corner index
            // is 1; with k corners and k edges the index is k minus the
            // number of agreeing edge sides, which cannot exceed k.
            let walk_len: usize =
                gamma.sub.walks_of_region(r).iter().map(|&w| gamma.sub.walks[w].len()).sum();
            assert!(idx <= walk_len as i64);
        }
    }

    #[test]
    fn directed_cycle_detection() {
        let pair = cross_pair();
        let view = pair.view(Side::P);
        let t = full_star(Plus, vec![Out, In]);
        let gamma = orient_label_subgraph(view, &t).unwrap();
        // Tails at every slot of vertex 0: edges leave 0 toward 1 and
        // back-edges from 1 are not directed, so no cycle unless vertex 1
        // also gets tails.
        let tails0: BTreeSet<Slot> = (0..2).map(|x| Slot { v: 0, x }).collect();
        assert!(!gamma.has_directed_cycle_with_tails_at(&tails0));
        let all: BTreeSet<Slot> =
            (0..2).flat_map(|v| (0..2).map(move |x| Slot { v, x })).collect();
        assert!(gamma.has_directed_cycle_with_tails_at(&all));
    }

    #[test]
    fn exceptional_labels_of_sublabel_sets() {
        // In the loop pair both loops span labels {0, 1}, so G({0}) keeps
        // both edges and their far endpoints at label 1 are exceptional.
        let pair = loop_pair();
        let view = pair.view(Side::P);
        let exc = exceptional_labels(view, &BTreeSet::from([0usize]));
        assert_eq!(exc, BTreeSet::from([1usize]));
        let none = exceptional_labels(view, &BTreeSet::from([0usize, 1usize]));
        assert!(none.is_empty());
        // In the cross pair each edge stays at one label: no exceptions.
        let cross = cross_pair();
        let exc = exceptional_labels(cross.view(Side::P), &BTreeSet::from([0usize]));
        assert!(exc.is_empty());
    }
}
