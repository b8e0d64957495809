//! A minimal combinatorial-map engine: graphs embedded in orientable
//! surfaces, encoded by rotation systems on darts.
//!
//! Every edge `e` owns two *darts* (directed half-edges) `2e` and `2e + 1`;
//! the involution `twin(d) = d ^ 1` swaps them.  A vertex stores its incident
//! darts in **counterclockwise** order.  Faces are recovered as orbits of
//! `d -> next_ccw(twin(d))`; with this convention a face walk crosses each
//! vertex corner counterclockwise, from the arrival dart to the departure
//! dart.  A connected component is spherical exactly when
//! `V - E + F = 2` holds for it.
//!
//! The module also provides a small union-find ([`Dsu`]) used to coarsen
//! faces into the *regions* of a subgraph (deleting an edge merges the faces
//! on its two sides; deleting a vertex merges the faces around it).

use crate::error::{Error, Result};

/// A directed half-edge.  Edge `e` owns darts `2e` and `2e + 1`.
pub type Dart = usize;
/// Internal 0-based vertex index.
pub type VertexId = usize;
/// Index of a traced boundary walk (for a connected map: a face).
pub type WalkId = usize;

/// The twin (reversal) of a dart.
#[inline]
pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

/// The edge owning a dart.
#[inline]
pub fn edge_of(d: Dart) -> usize {
    d / 2
}

/// An embedded multigraph given by counterclockwise rotations of darts.
#[derive(Clone, Debug)]
pub struct CombMap {
    rotation: Vec<Vec<Dart>>,
    origin: Vec<VertexId>,
    /// Position of each dart inside `rotation[origin[d]]`.
    slot: Vec<usize>,
}

impl CombMap {
    /// Builds a map from per-vertex counterclockwise dart lists.
    ///
    /// The dart lists must jointly contain each of `0..2E` exactly once for
    /// some `E` (loops contribute both darts to the same vertex).
    pub fn from_rotations(rotation: Vec<Vec<Dart>>) -> Result<CombMap> {
        let n_darts: usize = rotation.iter().map(|r| r.len()).sum();
        if n_darts % 2 != 0 {
            return Err(Error::InvalidInput(format!(
                "odd number of darts ({n_darts}) in rotation system"
            )));
        }
        let mut origin = vec![usize::MAX; n_darts];
        let mut slot = vec![usize::MAX; n_darts];
        for (v, darts) in rotation.iter().enumerate() {
            for (i, &d) in darts.iter().enumerate() {
                if d >= n_darts {
                    return Err(Error::InvalidInput(format!(
                        "dart {d} out of range (have {n_darts} darts)"
                    )));
                }
                if origin[d] != usize::MAX {
                    return Err(Error::InvalidInput(format!(
                        "dart {d} appears twice in rotation system"
                    )));
                }
                origin[d] = v;
                slot[d] = i;
            }
        }
        Ok(CombMap {
            rotation,
            origin,
            slot,
        })
    }

    /// Number of vertices.
    pub fn n_vertices(&self) -> usize {
        self.rotation.len()
    }

    /// Number of edges.
    pub fn n_edges(&self) -> usize {
        self.origin.len() / 2
    }

    /// Number of darts (`2E`).
    pub fn n_darts(&self) -> usize {
        self.origin.len()
    }

    /// Degree of a vertex (loops count twice).
    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    /// The vertex a dart points away from.
    #[inline]
    pub fn origin(&self, d: Dart) -> VertexId {
        self.origin[d]
    }

    /// The vertex a dart points toward.
    #[inline]
    pub fn target(&self, d: Dart) -> VertexId {
        self.origin[twin(d)]
    }

    /// Darts around a vertex in counterclockwise order.
    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rotation[v]
    }

    /// Position of a dart within its vertex rotation.
    #[inline]
    pub fn rotation_index(&self, d: Dart) -> usize {
        self.slot[d]
    }

    /// The next dart counterclockwise around `origin(d)`.
    #[inline]
    pub fn next_ccw(&self, d: Dart) -> Dart {
        let r = &self.rotation[self.origin[d]];
        r[(self.slot[d] + 1) % r.len()]
    }

    /// The previous dart counterclockwise (= next clockwise).
    #[inline]
    pub fn prev_ccw(&self, d: Dart) -> Dart {
        let r = &self.rotation[self.origin[d]];
        r[(self.slot[d] + r.len() - 1) % r.len()]
    }

    /// The successor of a dart along its face walk.
    #[inline]
    pub fn next_in_face(&self, d: Dart) -> Dart {
        self.next_ccw(twin(d))
    }

    /// Traces all boundary walks (faces of each connected component).
    ///
    /// Walks are listed in increasing order of their smallest dart, and each
    /// walk starts at its smallest dart, so the result is deterministic.
    pub fn faces(&self) -> Faces {
        let n = self.n_darts();
        let mut face_of = vec![usize::MAX; n];
        let mut walks = Vec::new();
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = walks.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = id;
                walk.push(d);
                d = self.next_in_face(d);
                if d == start {
                    break;
                }
            }
            walks.push(walk);
        }
        Faces { walks, face_of }
    }

    /// Connected components over vertices (edges as connections).
    ///
    /// Component ids are assigned in increasing order of smallest vertex.
    pub fn vertex_components(&self) -> Components {
        let n = self.n_vertices();
        let mut comp_of = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = count;
            count += 1;
            let mut queue = vec![start];
            comp_of[start] = id;
            while let Some(v) = queue.pop() {
                for &d in &self.rotation[v] {
                    let w = self.target(d);
                    if comp_of[w] == usize::MAX {
                        comp_of[w] = id;
                        queue.push(w);
                    }
                }
            }
        }
        Components { comp_of, count }
    }

    /// Euler characteristic `V - E + F` of every component.
    ///
    /// A component with no edges is a lone vertex on a sphere; it gets
    /// characteristic 2 by convention.
    pub fn euler_by_component(&self, faces: &Faces, comps: &Components) -> Vec<i64> {
        let mut v_count = vec![0i64; comps.count];
        let mut e_count = vec![0i64; comps.count];
        let mut f_count = vec![0i64; comps.count];
        for v in 0..self.n_vertices() {
            v_count[comps.comp_of[v]] += 1;
        }
        for e in 0..self.n_edges() {
            e_count[comps.comp_of[self.origin(2 * e)]] += 1;
        }
        for walk in &faces.walks {
            f_count[comps.comp_of[self.origin(walk[0])]] += 1;
        }
        (0..comps.count)
            .map(|c| {
                if e_count[c] == 0 {
                    2
                } else {
                    v_count[c] - e_count[c] + f_count[c]
                }
            })
            .collect()
    }

    /// True when every component is a sphere (`V - E + F = 2`).
    pub fn is_spherical(&self) -> bool {
        let faces = self.faces();
        let comps = self.vertex_components();
        self.euler_by_component(&faces, &comps)
            .iter()
            .all(|&chi| chi == 2)
    }
}

/// The traced boundary walks of a map.
#[derive(Clone, Debug)]
pub struct Faces {
    /// Each walk as a cyclic dart sequence, `walk[i+1] = next_in_face(walk[i])`.
    pub walks: Vec<Vec<Dart>>,
    /// Walk id of each dart.
    pub face_of: Vec<WalkId>,
}

impl Faces {
    /// Number of walks.
    pub fn n(&self) -> usize {
        self.walks.len()
    }

    /// The corners of a walk, in traversal order.
    ///
    /// The corner between consecutive walk darts `d_i -> d_{i+1}` sits at the
    /// vertex `origin(d_{i+1})`; the traversal arrives on `twin(d_i)` and
    /// departs on `d_{i+1}`, sweeping the corner counterclockwise.
    pub fn corners(&self, map: &CombMap, walk: WalkId) -> Vec<Corner> {
        let w = &self.walks[walk];
        let len = w.len();
        (0..len)
            .map(|i| {
                let depart = w[(i + 1) % len];
                Corner {
                    vertex: map.origin(depart),
                    arrive: twin(w[i]),
                    depart,
                }
            })
            .collect()
    }
}

/// One vertex corner crossed by a face walk.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Corner {
    /// The fat vertex the corner sits on.
    pub vertex: VertexId,
    /// The dart on which the walk arrives (pointing away from `vertex`).
    pub arrive: Dart,
    /// The dart on which the walk departs (pointing away from `vertex`).
    pub depart: Dart,
}

/// Vertex partition into connected components.
#[derive(Clone, Debug)]
pub struct Components {
    /// Component id of each vertex.
    pub comp_of: Vec<usize>,
    /// Number of components.
    pub count: usize,
}

/// Union-find over `0..n`, used to merge faces into regions.
#[derive(Clone, Debug)]
pub struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    /// `n` singleton classes.
    pub fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    /// Representative of the class of `x`.
    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`.
    pub fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }

    /// True when `a` and `b` are in the same class.
    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}
