//! Offline search for the embedded great-web fixture.
//!
//! Temporary development tool.  A hand-derived 36-edge candidate on
//! p=6/q=12 carries the full feature set (main bigon on {1,3}, the
//! sigma ring on {0,2} with tails at label 4, a connected four-vertex
//! web with one leaving edge per regular label, a two-vertex pod, and a
//! census-clean outside).  The candidate is checked directly; if its
//! Euler deficits are nonzero, the outside edges are annealed while the
//! interior stays pinned.
//!
//! ```text
//! cargo run -p schargraph --release --example anneal_great_web
//! ```

use schargraph::cycles::{
    all_x_cycles, cycle_subview, delta_label_sides, descend_to_s_disk, edges_in_s_disk_counts,
    find_great_webs, find_s_sets, isolated_vertices, s_disk_flags, scharlemann_consistency,
};
use schargraph::pair::{IntersectionPair, RawPair, Side};
use schargraph::sign::Sign;
use std::collections::{BTreeMap, BTreeSet};

const NV: usize = 12;
const NL: usize = 6;
const NS: usize = NV * NL; // slots, indexed v * NL + x

/// Positive Q-vertices: the odd ids (web {1,3,5,7}, pod {9,11}).
fn qsign(v: usize) -> i8 {
    if v % 2 == 1 {
        1
    } else {
        -1
    }
}

/// P-side signs by label.
fn psign(x: usize) -> i8 {
    if x % 2 == 1 {
        1
    } else {
        -1
    }
}

fn slot(v: usize, x: usize) -> usize {
    v * NL + x
}

fn vert(s: usize) -> usize {
    s / NL
}

fn label(s: usize) -> usize {
    s % NL
}

fn parity_ok(a: usize, b: usize) -> bool {
    qsign(vert(a)) * psign(label(a)) != qsign(vert(b)) * psign(label(b))
}

type Pin = ((usize, usize), (usize, usize));

/// The hand-derived candidate.  Interior (first 22 edges): crossing A/B,
/// sigma C/D, four web leaves onto the ring's web-side slots, eight web
/// interior edges, pod and negative-pair internals.  Outside (last 14):
/// a wiring whose per-label functional graphs close no uniform cycle
/// beyond the bigon ({1,3} at labels 0,1) and the ring ({0,2} at 1,4).
fn hand_design() -> Vec<Pin> {
    if std::env::var("DESIGN").as_deref() == Ok("v3") {
        // Sigma heads at label 1; web leaves split between both ring
        // vertices (two web-side arc slots each).
        return vec![
            ((1, 0), (3, 1)),  // A
            ((3, 0), (1, 1)),  // B
            ((0, 4), (2, 1)),  // C
            ((2, 4), (0, 1)),  // D
            ((5, 2), (0, 2)),  // leaf at label 2
            ((7, 4), (2, 2)),  // leaf at label 4
            ((7, 3), (0, 3)),  // leaf at label 3
            ((5, 5), (2, 3)),  // leaf at label 5
            ((1, 2), (3, 3)),  // web interior
            ((3, 2), (5, 1)),
            ((1, 4), (5, 3)),
            ((3, 4), (7, 1)),
            ((1, 3), (7, 0)),
            ((3, 5), (5, 0)),
            ((1, 5), (7, 2)),
            ((5, 4), (7, 5)),
            ((9, 2), (11, 3)), // pod interior
            ((9, 4), (11, 5)),
            ((4, 2), (6, 3)),  // negative pair {4,6}
            ((4, 4), (6, 5)),
            ((10, 2), (8, 3)), // negative pair {8,10}
            ((10, 4), (8, 5)),
            ((9, 0), (0, 0)),  // outside
            ((11, 0), (2, 0)),
            ((11, 2), (6, 2)),
            ((11, 4), (6, 4)),
            ((9, 1), (8, 1)),
            ((11, 1), (6, 1)),
            ((9, 3), (4, 3)),
            ((9, 5), (4, 5)),
            ((8, 2), (0, 5)),
            ((8, 4), (4, 1)),
            ((10, 5), (4, 0)),
            ((10, 3), (6, 0)),
            ((10, 1), (8, 0)),
            ((2, 5), (10, 0)),
        ];
    }
    // Default: sigma heads at label 3, so the ring edge-ends sit
    // rotationally adjacent at both ring vertices and every web leaf
    // lands on vertex 0 while vertex 2 faces outward.
    vec![
        ((1, 0), (3, 1)),  // A
        ((3, 0), (1, 1)),  // B
        ((0, 4), (2, 3)),  // C
        ((2, 4), (0, 3)),  // D
        ((5, 2), (0, 2)),  // leaf at label 2
        ((7, 3), (0, 1)),  // leaf at label 3
        ((7, 4), (0, 0)),  // leaf at label 4
        ((5, 5), (0, 5)),  // leaf at label 5
        ((1, 2), (3, 3)),  // web interior
        ((3, 2), (5, 1)),
        ((1, 4), (5, 3)),
        ((3, 4), (7, 1)),
        ((1, 3), (7, 0)),
        ((3, 5), (5, 0)),
        ((1, 5), (7, 2)),
        ((5, 4), (7, 5)),
        ((9, 2), (11, 3)), // pod interior
        ((9, 4), (11, 5)),
        ((4, 2), (6, 3)),  // negative pair {4,6}
        ((4, 4), (6, 5)),
        ((10, 2), (8, 3)), // negative pair {8,10}
        ((10, 4), (8, 5)),
        ((2, 0), (9, 0)),  // outside
        ((4, 0), (10, 5)),
        ((6, 0), (10, 3)),
        ((8, 0), (10, 1)),
        ((10, 0), (2, 5)),
        ((4, 5), (9, 5)),
        ((4, 3), (9, 3)),
        ((2, 1), (6, 4)),
        ((6, 1), (11, 1)),
        ((4, 1), (8, 4)),
        ((8, 1), (9, 1)),
        ((2, 2), (11, 0)),
        ((6, 2), (11, 2)),
        ((8, 2), (11, 4)),
    ]
}

struct State {
    partner: [usize; NS],
    pinned: [bool; NS],
}

impl State {
    fn objective(&self) -> i64 {
        10 * (self.q_deficit() + self.p_deficit()) + self.feature_penalty() + self.census_soft()
    }

    /// Deficits plus hard feature terms; zero means worth a battery run.
    fn hard_cost(&self) -> i64 {
        10 * (self.q_deficit() + self.p_deficit()) + self.feature_penalty()
    }

    fn hash(&self) -> u64 {
        let mut h = 0xcbf29ce484222325u64;
        for &p in &self.partner {
            h ^= p as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        h
    }

    /// Face trace on the Q side: rotation advances labels, ascending on
    /// positive vertices.
    fn q_deficit(&self) -> i64 {
        let rot = |s: usize| -> usize {
            let (v, x) = (vert(s), label(s));
            if qsign(v) > 0 {
                slot(v, (x + 1) % NL)
            } else {
                slot(v, (x + NL - 1) % NL)
            }
        };
        self.deficit(rot, |s| vert(s), NV)
    }

    /// Face trace on the P side: rotation advances vertex ids, ascending
    /// on positive labels.
    fn p_deficit(&self) -> i64 {
        let rot = |s: usize| -> usize {
            let (v, x) = (vert(s), label(s));
            if psign(x) > 0 {
                slot((v + 1) % NV, x)
            } else {
                slot((v + NV - 1) % NV, x)
            }
        };
        self.deficit(rot, |s| label(s), NL)
    }

    fn deficit(&self, rot: impl Fn(usize) -> usize, node: impl Fn(usize) -> usize, n: usize) -> i64 {
        // Components over the edge relation node(s) ~ node(partner(s)).
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        for s in 0..NS {
            let (a, b) = (node(s), node(self.partner[s]));
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut vc = vec![0i64; n];
        let mut fc = vec![0i64; n];
        let mut ec = vec![0i64; n];
        for v in 0..n {
            vc[find(&mut parent, v)] += 1;
        }
        for s in 0..NS {
            ec[find(&mut parent, node(s))] += 1;
        }
        let mut seen = [false; NS];
        for start in 0..NS {
            if seen[start] {
                continue;
            }
            let mut s = start;
            loop {
                seen[s] = true;
                s = rot(self.partner[s]);
                if s == start {
                    break;
                }
            }
            fc[find(&mut parent, node(start))] += 1;
        }
        let mut d = 0i64;
        for v in 0..n {
            if find(&mut parent, v) == v {
                d += 2 - (vc[v] - ec[v] / 2 + fc[v]);
            }
        }
        d
    }

    fn feature_penalty(&self) -> i64 {
        let mut cost = 0i64;
        let mut parent: Vec<usize> = (0..NV).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        let mut qparent: Vec<usize> = (0..NV).collect();
        for s in 0..NS {
            let (a, b) = (vert(s), vert(self.partner[s]));
            let (ra, rb) = (find(&mut qparent, a), find(&mut qparent, b));
            qparent[ra] = rb;
            if qsign(a) == qsign(b) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        // Q must be connected.
        let qcomps = (0..NV).filter(|&v| find(&mut qparent, v) == v).count() as i64;
        cost += 5 * (qcomps - 1);
        // No isolated vertices.
        for v in 0..NV {
            let alone = (0..NL).all(|x| qsign(vert(self.partner[slot(v, x)])) != qsign(v));
            if alone {
                cost += 3;
            }
        }
        // The web (s)-set is exactly {1,3,5,7} with one leaving edge per
        // regular label; the pod is exactly {9,11} leaving at every label.
        let web: BTreeSet<usize> =
            (0..NV).filter(|&v| find(&mut parent, v) == find(&mut parent, 1)).collect();
        if web != BTreeSet::from([1, 3, 5, 7]) {
            cost += 5;
        } else {
            let mut nleave = 0i64;
            let mut leave: BTreeSet<usize> = BTreeSet::new();
            for &v in &web {
                for x in 0..NL {
                    if !web.contains(&vert(self.partner[slot(v, x)])) {
                        nleave += 1;
                        leave.insert(x);
                    }
                }
            }
            cost += 2 * (nleave - 4).abs();
            cost += 2 * (4 - leave.intersection(&BTreeSet::from([2, 3, 4, 5])).count() as i64);
        }
        let pod: BTreeSet<usize> =
            (0..NV).filter(|&v| find(&mut parent, v) == find(&mut parent, 9)).collect();
        if pod != BTreeSet::from([9, 11]) {
            cost += 5;
        } else {
            let mut leave: BTreeSet<usize> = BTreeSet::new();
            for &v in &pod {
                for x in 0..NL {
                    if !pod.contains(&vert(self.partner[slot(v, x)])) {
                        leave.insert(x);
                    }
                }
            }
            cost += (NL - leave.len()) as i64;
        }
        cost
    }

    /// Itemized duplicate of `feature_penalty` for end-of-run diagnostics
    /// (kept separate so the hot loop never allocates strings).
    fn feature_report(&self) -> String {
        let mut out = Vec::new();
        let mut parent: Vec<usize> = (0..NV).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        let mut qparent: Vec<usize> = (0..NV).collect();
        for s in 0..NS {
            let (a, b) = (vert(s), vert(self.partner[s]));
            let (ra, rb) = (find(&mut qparent, a), find(&mut qparent, b));
            qparent[ra] = rb;
            if qsign(a) == qsign(b) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        let qcomps = (0..NV).filter(|&v| find(&mut qparent, v) == v).count() as i64;
        out.push(format!("qcomps={qcomps}(+{})", 5 * (qcomps - 1)));
        for v in 0..NV {
            let alone = (0..NL).all(|x| qsign(vert(self.partner[slot(v, x)])) != qsign(v));
            if alone {
                out.push(format!("isolated-{v}(+3)"));
            }
        }
        let web: BTreeSet<usize> =
            (0..NV).filter(|&v| find(&mut parent, v) == find(&mut parent, 1)).collect();
        if web != BTreeSet::from([1, 3, 5, 7]) {
            out.push(format!("web={web:?}(+5)"));
        } else {
            let mut nleave = 0i64;
            let mut leave: BTreeSet<usize> = BTreeSet::new();
            for &v in &web {
                for x in 0..NL {
                    if !web.contains(&vert(self.partner[slot(v, x)])) {
                        nleave += 1;
                        leave.insert(x);
                    }
                }
            }
            out.push(format!("web-nleave={nleave}(+{})", 2 * (nleave - 4).abs()));
            let cover = leave.intersection(&BTreeSet::from([2, 3, 4, 5])).count() as i64;
            out.push(format!("web-leave={leave:?}(+{})", 2 * (4 - cover)));
        }
        let pod: BTreeSet<usize> =
            (0..NV).filter(|&v| find(&mut parent, v) == find(&mut parent, 9)).collect();
        if pod != BTreeSet::from([9, 11]) {
            out.push(format!("pod={pod:?}(+5)"));
        } else {
            let mut leave: BTreeSet<usize> = BTreeSet::new();
            for &v in &pod {
                for x in 0..NL {
                    if !pod.contains(&vert(self.partner[slot(v, x)])) {
                        leave.insert(x);
                    }
                }
            }
            out.push(format!("pod-leave={leave:?}(+{})", NL - leave.len()));
        }
        out.join(" ")
    }

    /// Soft guidance only: uniform-sign functional cycles beyond the
    /// intended ones often — not always — break the census stage.  The
    /// full battery is the judge.
    fn census_soft(&self) -> i64 {
        let mut cost = 0i64;
        for x in 0..NL {
            let next = |v: usize| vert(self.partner[slot(v, x)]);
            for start in 0..NV {
                let (mut slow, mut fast) = (start, next(start));
                while slow != fast {
                    slow = next(slow);
                    fast = next(next(fast));
                }
                if slow != start {
                    continue;
                }
                let mut cyc = vec![start];
                let mut v = next(start);
                while v != start {
                    cyc.push(v);
                    v = next(v);
                }
                if cyc.iter().skip(1).any(|&w| w < start) {
                    continue; // count each cycle once, from its smallest id
                }
                if !cyc.iter().all(|&w| qsign(w) == qsign(cyc[0])) {
                    continue;
                }
                let mut ids = cyc.clone();
                ids.sort_unstable();
                let allowed = (ids == vec![1, 3] && (x == 0 || x == 1))
                    || (ids == vec![0, 2] && (x == 1 || x == 3 || x == 4));
                if !allowed {
                    cost += 1;
                }
            }
        }
        cost
    }

    fn raw_pair(&self) -> RawPair {
        let sign = |s: i8| if s > 0 { Sign::Plus } else { Sign::Minus };
        let mut matching = Vec::new();
        for s in 0..NS {
            let t = self.partner[s];
            if s < t {
                matching.push([[label(s) + 1, vert(s) + 1], [label(t) + 1, vert(t) + 1]]);
            }
        }
        RawPair {
            p: NL,
            q: NV,
            signs_p: (0..NL).map(|x| sign(psign(x))).collect(),
            signs_q: (0..NV).map(|v| sign(qsign(v))).collect(),
            matching,
            nesting: None,
        }
    }
}

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    fn chance(&mut self, p: f64) -> bool {
        (self.next() as f64 / u64::MAX as f64) < p
    }
}

/// State with exactly the given edges (must cover all slots).
fn pinned_state(pins: &[Pin], n_pinned: usize) -> State {
    let mut partner = [usize::MAX; NS];
    let mut pinned = [false; NS];
    for (i, &((v1, x1), (v2, x2))) in pins.iter().enumerate() {
        let (a, b) = (slot(v1, x1), slot(v2, x2));
        assert!(partner[a] == usize::MAX && partner[b] == usize::MAX, "slot reused");
        assert!(parity_ok(a, b), "invalid edge ({v1},{x1})-({v2},{x2})");
        partner[a] = b;
        partner[b] = a;
        if i < n_pinned {
            pinned[a] = true;
            pinned[b] = true;
        }
    }
    assert!(partner.iter().all(|&p| p != usize::MAX), "uncovered slots");
    State { partner, pinned }
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
    let mut sigs: Vec<(usize, Vec<usize>)> = all.iter().map(|c| (c.x, c.vertices.clone())).collect();
    sigs.sort();
    // The ring pair closes a second functional cycle at the common head
    // label (1 or 3 depending on the design); both shapes are fine.
    let target = |t: usize| {
        let mut v = vec![
            (0, vec![1, 3]),
            (1, vec![1, 3]),
            (t, vec![0, 2]),
            (4, vec![0, 2]),
        ];
        v.sort();
        v
    };
    if sigs != target(1) && sigs != target(3) {
        return Err("cycle-census");
    }
    if all.iter().any(|c| c.new && c.great) {
        return Err("new-great");
    }
    let core: BTreeSet<usize> = [1, 3, 5, 7].into_iter().collect();
    let mut sigma = None;
    for c in all.iter().filter(|c| c.new && c.x == 4 && c.vertices == vec![0, 2]) {
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
    let webs = find_great_webs(view, 4).map_err(|_| "web-budget")?;
    if !webs.iter().any(|w| w.vertices == core && w.connected && w.m == 4) {
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

fn check_candidate(st: &State, label: &str) -> bool {
    println!(
        "{label}: q_deficit {} p_deficit {} feat {} census {}",
        st.q_deficit(),
        st.p_deficit(),
        st.feature_penalty(),
        st.census_soft()
    );
    let raw = st.raw_pair();
    match IntersectionPair::from_raw(&raw) {
        Ok(pair) => match battery(&pair) {
            Ok(report) => {
                println!("WINNER {label} :: {report}");
                println!("{}", serde_json::to_string_pretty(&raw).unwrap());
                true
            }
            Err(stage) => {
                println!("{label}: battery failed at {stage}");
                false
            }
        },
        Err(e) => {
            println!("{label}: from_raw rejected: {e}");
            false
        }
    }
}

fn main() {
    let design = hand_design();
    // How many leading design edges stay pinned while annealing; the
    // remaining edges form the initial state but may be rewired.
    let n_pinned: usize = std::env::var("PINS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let steps: u64 = std::env::var("STEPS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(400_000);
    // Battery fires whenever hard cost (deficits + features) is at most
    // this; raising it turns the battery into a diagnostic for near-misses.
    let batt: i64 = std::env::var("BATT")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let st = pinned_state(&design, design.len());
    if check_candidate(&st, "hand design") {
        return;
    }

    let mut fails: BTreeMap<String, u64> = BTreeMap::new();
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut floors: BTreeMap<i64, u64> = BTreeMap::new();
    let mut best_ever = i64::MAX;
    for seed in 1..=12u64 {
        let mut rng = Rng(seed.wrapping_mul(0x9E3779B97F4A7C15) | 1);
        let mut st = pinned_state(&design, n_pinned);
        if std::env::var("SCRAMBLE").is_ok() {
            for _ in 0..200 {
                try_rewire2(&mut st, &mut rng, i64::MAX, 1e9);
            }
        }
        let mut cost = st.objective();
        let mut temp = 2.0f64;
        let mut run_best = cost;
        let mut best_partner = st.partner;
        let mut since_improve = 0u64;
        for _step in 0..steps {
            if cost < run_best {
                run_best = cost;
                best_partner = st.partner;
                since_improve = 0;
            } else {
                since_improve += 1;
                if since_improve > 30_000 {
                    temp = 1.2; // reheat a stuck run
                    since_improve = 0;
                }
            }
            if st.hard_cost() <= batt && seen.insert(st.hash()) {
                let raw = st.raw_pair();
                match IntersectionPair::from_raw(&raw) {
                    Ok(pair) => match battery(&pair) {
                        Ok(report) => {
                            println!("WINNER seed {seed} :: {report}");
                            println!("{}", serde_json::to_string_pretty(&raw).unwrap());
                            return;
                        }
                        Err(stage) => {
                            *fails.entry(stage.to_string()).or_default() += 1;
                        }
                    },
                    Err(e) => {
                        let key: String = format!("{e}").chars().take(70).collect();
                        *fails.entry(key).or_default() += 1;
                    }
                }
                if cost == 0 {
                    temp = 2.0; // kick via reheat, keep pins
                }
            }
            temp = (temp * 0.99995).max(0.05);
            let accepted = if rng.below(10) < 3 {
                try_rotate3(&mut st, &mut rng, cost, temp)
            } else {
                try_rewire2(&mut st, &mut rng, cost, temp)
            };
            if let Some(new_cost) = accepted {
                cost = new_cost;
                if cost < best_ever {
                    best_ever = cost;
                    println!(
                        "seed {seed}: best {cost} = 10*q {} + 10*p {} + feat {} + census {}",
                        st.q_deficit(),
                        st.p_deficit(),
                        st.feature_penalty(),
                        st.census_soft()
                    );
                }
            }
        }
        *floors.entry(run_best).or_default() += 1;
        let best = State {
            partner: best_partner,
            pinned: st.pinned,
        };
        println!("seed {seed} best-state features: {}", best.feature_report());
        if run_best <= 20 && check_candidate(&best, &format!("seed {seed} best")) {
            return;
        }
        println!("seed {seed} done; floors {floors:?}; fails {fails:?}");
    }
    println!("no winner; floors {floors:?}; failure tallies: {fails:#?}");
}

/// Swap partners between two edges.
fn try_rewire2(st: &mut State, rng: &mut Rng, cost: i64, temp: f64) -> Option<i64> {
    let s = rng.below(NS);
    let t = rng.below(NS);
    let (sp, tp) = (st.partner[s], st.partner[t]);
    if s == t || s == tp || st.pinned[s] || st.pinned[t] {
        return None;
    }
    let (a1, a2, b1, b2) = if rng.below(2) == 0 {
        (s, t, sp, tp)
    } else {
        (s, tp, sp, t)
    };
    if vert(a1) == vert(a2) || vert(b1) == vert(b2) {
        return None;
    }
    if !parity_ok(a1, a2) || !parity_ok(b1, b2) {
        return None;
    }
    let old = [(s, sp), (t, tp)];
    st.partner[a1] = a2;
    st.partner[a2] = a1;
    st.partner[b1] = b2;
    st.partner[b2] = b1;
    if cost == i64::MAX {
        return Some(cost); // scramble mode: accept anything legal
    }
    let new_cost = st.objective();
    let delta = new_cost - cost;
    if delta <= 0 || rng.chance((-(delta as f64) / temp).exp()) {
        Some(new_cost)
    } else {
        for &(a, b) in &old {
            st.partner[a] = b;
            st.partner[b] = a;
        }
        None
    }
}

/// Rotate one endpoint among three edges: a cyclic 3-rewire that plain
/// 2-rewires can only reach through higher-cost intermediates.
fn try_rotate3(st: &mut State, rng: &mut Rng, cost: i64, temp: f64) -> Option<i64> {
    let s = rng.below(NS);
    let t = rng.below(NS);
    let u = rng.below(NS);
    let (sp, tp, up) = (st.partner[s], st.partner[t], st.partner[u]);
    let six = [s, sp, t, tp, u, up];
    for (i, &a) in six.iter().enumerate() {
        if st.pinned[a] || six[i + 1..].contains(&a) {
            return None;
        }
    }
    // New pairing: (s,tp), (t,up), (u,sp).
    let pairs = [(s, tp), (t, up), (u, sp)];
    for &(a, b) in &pairs {
        if vert(a) == vert(b) || !parity_ok(a, b) {
            return None;
        }
    }
    let old = [(s, sp), (t, tp), (u, up)];
    for &(a, b) in &pairs {
        st.partner[a] = b;
        st.partner[b] = a;
    }
    let new_cost = st.objective();
    let delta = new_cost - cost;
    if delta <= 0 || rng.chance((-(delta as f64) / temp).exp()) {
        Some(new_cost)
    } else {
        for &(a, b) in &old {
            st.partner[a] = b;
            st.partner[b] = a;
        }
        None
    }
}
