//! Offline construction search for the embedded great-web fixture.
//!
//! Temporary development tool: sweeps per-vertex slot assignments of a
//! family of abstract edge structures, keeps the assignments that
//! validate as a pair (spherical on both sides), and filters by the full
//! detection battery the fixture must satisfy.  Run with
//!
//! ```text
//! cargo run -p schargraph --release --example search_great_web
//! ```

use schargraph::cycles::{
    all_x_cycles, cycle_subview, delta_label_sides, descend_to_s_disk, edges_in_s_disk_counts,
    find_great_webs, find_s_sets, isolated_vertices, s_disk_flags, scharlemann_consistency,
};
use schargraph::pair::{IntersectionPair, RawNesting, RawNestingEntry, RawPair, Side};
use schargraph::sign::Sign;
use std::collections::{BTreeMap, BTreeSet};

const NV: usize = 12;
const NL: usize = 4;
const ND: usize = 48;
const UNSET: u8 = 255;

const Q_SIGNS: [i8; NV] = [-1, 1, -1, 1, -1, 1, -1, 1, 1, -1, 1, -1];

/// Abstract far-side + sigma structure shared by all variants:
/// sigma ring C (0-2), D (2-0), spokes X1 (0-6), X2 (2-4), outer triple
/// Y1..Y3 (4-6), pods P1..P3 (8-10), E1 (8-9), Q1..Q3 (9-11), E2 (10-11).
/// Web wiring differs per variant; edges 0..8 are the web + leaves.
type Edges = [(usize, usize); 24];

/// Ladder web: doubled 1-5 and 3-7 sides plus a 5-7 rung.
const LADDER: Edges = [
    (1, 3), // 0 A
    (1, 3), // 1 B
    (5, 1), // 2
    (7, 3), // 3
    (1, 5), // 4
    (3, 7), // 5
    (5, 7), // 6
    (5, 0), // 7 Lv1
    (7, 2), // 8 Lv2
    (0, 2), // 9 C
    (2, 0), // 10 D
    (0, 6), // 11 X1
    (2, 4), // 12 X2
    (4, 6), // 13 Y1
    (4, 6), // 14 Y2
    (4, 6), // 15 Y3
    (8, 10),
    (8, 10),
    (8, 10),
    (8, 9),
    (9, 11),
    (9, 11),
    (9, 11),
    (10, 11),
];

/// Quad web: a 4-cycle 1-5-3-7 plus the 5-7 chord.
const QUAD: Edges = [
    (1, 3), // 0 A
    (1, 3), // 1 B
    (5, 1), // 2
    (7, 3), // 3
    (1, 7), // 4
    (3, 5), // 5
    (5, 7), // 6
    (5, 0), // 7 Lv1
    (7, 2), // 8 Lv2
    (0, 2),
    (2, 0),
    (0, 6),
    (2, 4),
    (4, 6),
    (4, 6),
    (4, 6),
    (8, 10),
    (8, 10),
    (8, 10),
    (8, 9),
    (9, 11),
    (9, 11),
    (9, 11),
    (10, 11),
];

struct Ctx {
    edges: Edges,
    psigns: [i8; NL],
}

impl Ctx {
    fn origin(&self, d: usize) -> usize {
        let (a, b) = self.edges[d / 2];
        if d % 2 == 0 {
            a
        } else {
            b
        }
    }

    fn darts_of(&self, v: usize) -> Vec<usize> {
        (0..ND).filter(|&d| self.origin(d) == v).collect()
    }

    /// Only the crossing pattern of the main bigon A, B is pinned, fixing
    /// the Scharlemann label pair at {0, 1}.
    fn pinned(&self, d: usize) -> u8 {
        match d {
            0 => 0, // A at vertex 1
            1 => 1, // A at vertex 3
            2 => 1, // B at vertex 1
            3 => 0, // B at vertex 3
            _ => UNSET,
        }
    }

    fn parity_ok(&self, labels: &[u8; ND], d: usize) -> bool {
        let o = d ^ 1;
        if labels[o] == UNSET {
            return true;
        }
        let cd = Q_SIGNS[self.origin(d)] * self.psigns[labels[d] as usize];
        let co = Q_SIGNS[self.origin(o)] * self.psigns[labels[o] as usize];
        cd != co
    }

    /// Euler test of one Q component under canonical rotations.
    fn q_spherical(&self, labels: &[u8; ND], verts: &[usize]) -> bool {
        let mut rot_next: BTreeMap<usize, usize> = BTreeMap::new();
        for &v in verts {
            let mut ds = self.darts_of(v);
            ds.sort_by_key(|&d| labels[d]);
            if Q_SIGNS[v] < 0 {
                ds.reverse();
            }
            for i in 0..ds.len() {
                rot_next.insert(ds[i], ds[(i + 1) % ds.len()]);
            }
        }
        let darts: Vec<usize> = verts.iter().flat_map(|&v| self.darts_of(v)).collect();
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut faces = 0i64;
        for &start in &darts {
            if seen.contains(&start) {
                continue;
            }
            faces += 1;
            let mut d = start;
            loop {
                seen.insert(d);
                d = rot_next[&(d ^ 1)];
                if d == start {
                    break;
                }
            }
        }
        let v = verts.len() as i64;
        let e = darts.len() as i64 / 2;
        v - e + faces == 2
    }

    /// Total sphericity deficit of the P side: 0 iff every P component is
    /// a sphere.
    fn p_deficit(&self, labels: &[u8; ND]) -> i64 {
        let mut rot_next = [0usize; ND];
        for x in 0..NL {
            let mut ds: Vec<usize> = (0..ND).filter(|&d| labels[d] as usize == x).collect();
            ds.sort_by_key(|&d| self.origin(d));
            if self.psigns[x] < 0 {
                ds.reverse();
            }
            for i in 0..ds.len() {
                rot_next[ds[i]] = ds[(i + 1) % ds.len()];
            }
        }
        let mut seen = [false; ND];
        let mut faces = 0i64;
        for start in 0..ND {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut d = start;
            loop {
                seen[d] = true;
                d = rot_next[d ^ 1];
                if d == start {
                    break;
                }
            }
        }
        // P components via union-find on the P endpoints (= labels).
        let mut parent: Vec<usize> = (0..NL).collect();
        fn find(p: &mut Vec<usize>, v: usize) -> usize {
            while p[v] != v {
                let g = p[p[v]];
                p[v] = g;
                return find(p, g);
            }
            v
        }
        for e in 0..24 {
            let (a, b) = (labels[2 * e] as usize, labels[2 * e + 1] as usize);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let comps = (0..NL).filter(|&v| find(&mut parent, v) == v).count() as i64;
        let chi = NL as i64 - 24 + faces;
        2 * comps - chi
    }

    /// Depth-first sweep of one component's per-vertex label bijections.
    fn component_solutions(
        &self,
        verts: &[usize],
        extra: impl Fn(&[u8; ND]) -> bool,
    ) -> Vec<[u8; ND]> {
        let mut labels = [UNSET; ND];
        let mut out = Vec::new();
        let mut perms: Vec<[u8; 4]> = Vec::with_capacity(24);
        permutations(&mut [0, 1, 2, 3], 0, &mut perms);
        self.dfs(verts, 0, &mut labels, &perms, &extra, &mut out);
        out
    }

    fn dfs(
        &self,
        verts: &[usize],
        idx: usize,
        labels: &mut [u8; ND],
        perms: &[[u8; 4]],
        extra: &impl Fn(&[u8; ND]) -> bool,
        out: &mut Vec<[u8; ND]>,
    ) {
        if idx == verts.len() {
            if extra(labels) && self.q_spherical(labels, verts) {
                out.push(*labels);
            }
            return;
        }
        let ds = self.darts_of(verts[idx]);
        'perms: for assignment in perms {
            for (i, &d) in ds.iter().enumerate() {
                if self.pinned(d) != UNSET && self.pinned(d) != assignment[i] {
                    continue 'perms;
                }
            }
            for (i, &d) in ds.iter().enumerate() {
                labels[d] = assignment[i];
            }
            if ds.iter().all(|&d| self.parity_ok(labels, d)) {
                self.dfs(verts, idx + 1, labels, perms, extra, out);
            }
            for &d in &ds {
                labels[d] = UNSET;
            }
        }
    }

    fn raw_pair(&self, labels: &[u8; ND], nesting: Option<RawNesting>) -> RawPair {
        let sign = |s: i8| if s > 0 { Sign::Plus } else { Sign::Minus };
        let matching = (0..24)
            .map(|e| {
                let (u0, u1) = self.edges[e];
                let (x0, x1) = (labels[2 * e] as usize, labels[2 * e + 1] as usize);
                [[x0 + 1, u0 + 1], [x1 + 1, u1 + 1]]
            })
            .collect();
        RawPair {
            p: NL,
            q: NV,
            signs_p: self.psigns.iter().map(|&s| sign(s)).collect(),
            signs_q: Q_SIGNS.iter().map(|&s| sign(s)).collect(),
            matching,
            nesting,
        }
    }
}

fn permutations(items: &mut [u8; 4], k: usize, out: &mut Vec<[u8; 4]>) {
    if k == items.len() {
        out.push(*items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

fn battery(pair: &IntersectionPair) -> Result<String, &'static str> {
    let view = pair.view(Side::Q);
    let rep = scharlemann_consistency(view);
    if !rep.consistent {
        return Err("census-inconsistent");
    }
    if !rep.cycles.iter().any(|c| c.vertices == vec![1, 3]) {
        return Err("no-sch-on-web-pair");
    }
    if rep.cycles.iter().any(|c| c.order != 2) {
        return Err("sch-order");
    }
    if rep.cycles.iter().any(|c| c.label_pair != Some((0, 1))) {
        return Err("sch-pair-value");
    }
    let all = all_x_cycles(view);
    if all.iter().any(|c| c.new && c.great) {
        return Err("new-great");
    }
    let core: BTreeSet<usize> = [1, 3, 5, 7].into_iter().collect();
    let mut sigma = None;
    for c in all.iter().filter(|c| c.new && c.vertices == vec![0, 2]) {
        let sub = cycle_subview(view, c);
        for r in 0..sub.n_regions {
            let inside: BTreeSet<usize> = sub.vertices_inside(r).into_iter().collect();
            if inside == core {
                sigma = Some((c.clone(), r));
            }
        }
    }
    let Some((sig, r)) = sigma else {
        return Err("no-sigma-bounding-web");
    };
    let sset = descend_to_s_disk(view, &sig, r).map_err(|_| "descent-failed")?;
    if sset.vertices != core {
        return Err("descent-wrong-set");
    }
    let webs = find_great_webs(view, 2).map_err(|_| "web-budget")?;
    if !webs.iter().any(|w| w.vertices == core && w.connected) {
        return Err("core-not-great-web");
    }
    if !isolated_vertices(view).is_empty() {
        return Err("isolated");
    }
    for s in find_s_sets(view) {
        if s.innermost {
            if !s_disk_flags(pair, Side::Q, &s).all_hold() {
                return Err("sdisk-flags");
            }
            if let Some(counts) = edges_in_s_disk_counts(view, &s) {
                if counts.iter().any(|c| c.count != c.expected) {
                    return Err("sdisk-counts");
                }
            }
        }
    }
    if delta_label_sides(pair, Side::Q).iter().any(|d| !d.disjoint) {
        return Err("delta");
    }
    Ok(format!(
        "sigma at x={} side {r}; {} scharlemann cycles; webs {:?}",
        sig.x,
        rep.cycles.len(),
        webs.iter().map(|w| w.vertices.clone()).collect::<Vec<_>>()
    ))
}

fn main() {
    let comp0 = [1usize, 3, 5, 7, 0, 2, 4, 6];
    let comp1 = [8usize, 10, 9, 11];
    for psigns in [[-1i8, 1, -1, 1], [-1i8, 1, 1, -1]] {
        for (name, edges) in [("ladder", LADDER), ("quad", QUAD)] {
            let ctx = Ctx { edges, psigns };
            println!("== psigns {psigns:?} web {name} ==");
            let sols0 = ctx.component_solutions(&comp0, |labels| {
                let a = labels[2 * 7]; // Lv1 end at vertex 5
                let b = labels[2 * 8]; // Lv2 end at vertex 7
                [a.min(b), a.max(b)] == [2, 3]
            });
            let sols1 = ctx.component_solutions(&comp1, |labels| {
                let a = labels[2 * 19]; // E1 end at vertex 8
                let b = labels[2 * 23]; // E2 end at vertex 10
                let c = labels[2 * 19 + 1]; // E1 end at vertex 9
                let d = labels[2 * 23 + 1]; // E2 end at vertex 11
                [a.min(b), a.max(b)] == [2, 3] && [c.min(d), c.max(d)] == [2, 3]
            });
            println!("component solutions: main {}, pods {}", sols0.len(), sols1.len());
            let mut best_deficit = i64::MAX;
            let mut spherical = 0u64;
            let mut fails: BTreeMap<String, u64> = BTreeMap::new();
            let mut winners = 0u64;
            let mut first: Option<String> = None;
            'outer: for s0 in &sols0 {
                for s1 in &sols1 {
                    let mut labels = [UNSET; ND];
                    for d in 0..ND {
                        labels[d] = s0[d].min(s1[d]);
                    }
                    let deficit = ctx.p_deficit(&labels);
                    best_deficit = best_deficit.min(deficit);
                    if deficit != 0 {
                        continue;
                    }
                    spherical += 1;
                    let raw = ctx.raw_pair(&labels, None);
                    let pair = match IntersectionPair::from_raw(&raw) {
                        Ok(p) => p,
                        Err(e) => {
                            let key: String = format!("{e}").chars().take(60).collect();
                            *fails.entry(key).or_default() += 1;
                            continue;
                        }
                    };
                    let qv = pair.view(Side::Q);
                    let podc = qv.comps.comp_of[8];
                    let mainc = qv.comps.comp_of[0];
                    for fo in 0..qv.faces.n() {
                        if qv.comp_of_walk[fo] != podc {
                            continue;
                        }
                        for fh in 0..qv.faces.n() {
                            if qv.comp_of_walk[fh] != mainc {
                                continue;
                            }
                            let nesting = RawNesting {
                                p: vec![],
                                q: vec![RawNestingEntry {
                                    component: podc,
                                    own_face: fo,
                                    host_component: mainc,
                                    host_face: fh,
                                }],
                            };
                            let raw2 = ctx.raw_pair(&labels, Some(nesting));
                            let placed = match IntersectionPair::from_raw(&raw2) {
                                Ok(p) => p,
                                Err(e) => {
                                    let key: String =
                                        format!("nest: {e}").chars().take(60).collect();
                                    *fails.entry(key).or_default() += 1;
                                    continue;
                                }
                            };
                            match battery(&placed) {
                                Ok(desc) => {
                                    winners += 1;
                                    if first.is_none() {
                                        println!("WINNER ownFace={fo} hostFace={fh} :: {desc}");
                                        first = Some(serde_json::to_string_pretty(&raw2).unwrap());
                                    }
                                }
                                Err(stage) => *fails.entry(stage.to_string()).or_default() += 1,
                            }
                        }
                    }
                    if winners > 0 {
                        break 'outer;
                    }
                }
            }
            println!(
                "best P deficit {best_deficit}; spherical candidates {spherical}; winners {winners}"
            );
            println!("failure tallies: {fails:#?}");
            if let Some(json) = first {
                println!("{json}");
                return;
            }
        }
    }
    println!("no winner found");
}
