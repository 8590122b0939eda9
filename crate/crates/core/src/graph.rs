//! Fullerene graphs as combinatorial embeddings.
//!
//! A graph is stored as a rotation system: for every vertex, the cyclic
//! clockwise order of its three neighbors. Faces are derived by tracing,
//! turning counterclockwise at each vertex (i.e. from the directed edge
//! `u -> v` the trace continues along `v -> w` where `w` precedes `u` in
//! the clockwise list at `v`). Vertex ids are dense and 0-based.

use thiserror::Error;

/// Errors raised while interpreting a rotation system.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    WrongDegree { vertex: usize, degree: usize },
    #[error("vertex {vertex} lists itself as a neighbor")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    #[error("vertex {vertex} lists out-of-range neighbor {neighbor}")]
    NeighborOutOfRange { vertex: usize, neighbor: usize },
    #[error("adjacency is not symmetric: {u} lists {v} but {v} does not list {u}")]
    Asymmetric { u: usize, v: usize },
}

/// One face of the embedding.
///
/// `boundary` is the vertex cycle in trace order; `neighbors[i]` is the face
/// on the other side of the boundary edge `boundary[i] -- boundary[i+1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub boundary: Vec<usize>,
    pub neighbors: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn is_pentagon(&self) -> bool {
        self.len() == 5
    }

    pub fn is_hexagon(&self) -> bool {
        self.len() == 6
    }

    /// Boundary edge `i` as an ordered pair `(boundary[i], boundary[i+1])`.
    pub fn edge(&self, i: usize) -> (usize, usize) {
        let k = self.len();
        (self.boundary[i % k], self.boundary[(i + 1) % k])
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.boundary.contains(&v)
    }
}

fn check_rotation(rotation: &[Vec<usize>]) -> Result<(), GraphError> {
    let n = rotation.len();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    for (v, neigh) in rotation.iter().enumerate() {
        if neigh.len() != 3 {
            return Err(GraphError::WrongDegree {
                vertex: v,
                degree: neigh.len(),
            });
        }
        for (i, &w) in neigh.iter().enumerate() {
            if w >= n {
                return Err(GraphError::NeighborOutOfRange {
                    vertex: v,
                    neighbor: w,
                });
            }
            if w == v {
                return Err(GraphError::SelfLoop { vertex: v });
            }
            if neigh[..i].contains(&w) {
                return Err(GraphError::RepeatedNeighbor {
                    vertex: v,
                    neighbor: w,
                });
            }
        }
    }
    for (v, neigh) in rotation.iter().enumerate() {
        for &w in neigh {
            if !rotation[w].contains(&v) {
                return Err(GraphError::Asymmetric { u: v, v: w });
            }
        }
    }
    Ok(())
}

/// Trace the faces of a cubic rotation system.
///
/// Every directed edge ends up on exactly one face boundary, so the face
/// sizes always sum to `3n`. Malformed rotations (wrong degree, loops,
/// asymmetric adjacency) are rejected; face sizes are *not* restricted
/// here — that is a fullerene-level property reported by validation.
pub fn trace_faces(rotation: &[Vec<usize>]) -> Result<Vec<Face>, GraphError> {
    check_rotation(rotation)?;
    let n = rotation.len();
    let slot = |u: usize, v: usize| rotation[u].iter().position(|&x| x == v).unwrap();

    // face_of[3u + slot] = face containing directed edge (u, rotation[u][slot])
    let mut face_of = vec![usize::MAX; 3 * n];
    let mut boundaries: Vec<Vec<usize>> = Vec::new();
    for start_u in 0..n {
        for start_s in 0..3 {
            if face_of[3 * start_u + start_s] != usize::MAX {
                continue;
            }
            let fid = boundaries.len();
            let mut boundary = Vec::new();
            let (mut u, mut s) = (start_u, start_s);
            loop {
                face_of[3 * u + s] = fid;
                boundary.push(u);
                let v = rotation[u][s];
                // counterclockwise turn: predecessor of u in the clockwise
                // list at v
                let s_back = slot(v, u);
                let s_next = (s_back + 2) % 3;
                u = v;
                s = s_next;
                if (u, s) == (start_u, start_s) {
                    break;
                }
            }
            boundaries.push(boundary);
        }
    }

    let faces = boundaries
        .iter()
        .enumerate()
        .map(|(id, boundary)| {
            let k = boundary.len();
            let neighbors = (0..k)
                .map(|i| {
                    let (a, b) = (boundary[i], boundary[(i + 1) % k]);
                    face_of[3 * b + slot(b, a)]
                })
                .collect();
            Face {
                id,
                boundary: boundary.clone(),
                neighbors,
            }
        })
        .collect();
    Ok(faces)
}

/// A cubic graph with a fixed combinatorial embedding and derived faces.
///
/// Construction only requires a well-formed rotation system; whether the
/// graph actually is a fullerene (faces of size 5 and 6 only, twelve
/// pentagons, 3-connected, n >= 20) is reported by [`FullereneGraph::validate`]
/// so that counterexamples can be built and inspected.
#[derive(Debug, Clone)]
pub struct FullereneGraph {
    n: usize,
    rotation: Vec<[usize; 3]>,
    faces: Vec<Face>,
    edges: Vec<(usize, usize)>,
    edge_ids: Vec<[usize; 3]>,
    face_at: Vec<[usize; 3]>,
}

impl FullereneGraph {
    pub fn from_rotation(rotation: &[Vec<usize>]) -> Result<Self, GraphError> {
        let faces = trace_faces(rotation)?;
        let n = rotation.len();
        let rotation: Vec<[usize; 3]> = rotation.iter().map(|r| [r[0], r[1], r[2]]).collect();

        let mut edges = Vec::with_capacity(3 * n / 2);
        let mut edge_ids = vec![[usize::MAX; 3]; n];
        for v in 0..n {
            for s in 0..3 {
                let w = rotation[v][s];
                if v < w {
                    edge_ids[v][s] = edges.len();
                    edges.push((v, w));
                }
            }
        }
        for v in 0..n {
            for s in 0..3 {
                let w = rotation[v][s];
                if v > w {
                    let back = rotation[w].iter().position(|&x| x == v).unwrap();
                    edge_ids[v][s] = edge_ids[w][back];
                }
            }
        }

        let mut face_at = vec![[usize::MAX; 3]; n];
        for face in &faces {
            let k = face.len();
            for i in 0..k {
                let (u, v) = (face.boundary[i], face.boundary[(i + 1) % k]);
                let s = rotation[u].iter().position(|&x| x == v).unwrap();
                face_at[u][s] = face.id;
            }
        }

        Ok(Self {
            n,
            rotation,
            faces,
            edges,
            edge_ids,
            face_at,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn rotation(&self) -> &[[usize; 3]] {
        &self.rotation
    }

    pub fn neighbors(&self, v: usize) -> [usize; 3] {
        self.rotation[v]
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.rotation[u].contains(&v)
    }

    pub fn neighbor_slot(&self, u: usize, v: usize) -> Option<usize> {
        self.rotation[u].iter().position(|&x| x == v)
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn pentagon_count(&self) -> usize {
        self.faces.iter().filter(|f| f.is_pentagon()).count()
    }

    /// Undirected edge id of `{u, v}`, if the edge exists.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.neighbor_slot(u, v).map(|s| self.edge_ids[u][s])
    }

    pub fn edge_endpoints(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The face whose boundary contains the directed edge `u -> v`.
    pub fn face_of_directed(&self, u: usize, v: usize) -> usize {
        self.face_at[u][self.neighbor_slot(u, v).expect("not an edge")]
    }

    /// Both faces incident with the undirected edge `{u, v}`.
    pub fn edge_faces(&self, u: usize, v: usize) -> (usize, usize) {
        (self.face_of_directed(u, v), self.face_of_directed(v, u))
    }

    /// The three faces incident with `v`.
    pub fn faces_at_vertex(&self, v: usize) -> [usize; 3] {
        self.face_at[v]
    }

    /// BFS distance from the nearest source to every vertex
    /// (`u32::MAX` where unreachable).
    pub fn distances_from(&self, sources: &[usize]) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for &s in sources {
            if dist[s] == u32::MAX {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &w in &self.rotation[v] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn connected_without(&self, removed: &[usize]) -> bool {
        let mut blocked = vec![false; self.n];
        for &r in removed {
            blocked[r] = true;
        }
        let Some(start) = (0..self.n).find(|&v| !blocked[v]) else {
            return true;
        };
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.rotation[v] {
                if !blocked[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n - removed.len()
    }

    /// Exhaustive search for a vertex cut of size <= 2. Quadratically many
    /// connectivity scans, so roughly cubic overall; fine at desk scale.
    pub fn find_small_cut(&self) -> Option<Vec<usize>> {
        if !self.connected_without(&[]) {
            return Some(vec![]);
        }
        if self.n <= 2 {
            return None;
        }
        for v in 0..self.n {
            if !self.connected_without(&[v]) {
                return Some(vec![v]);
            }
        }
        if self.n <= 3 {
            return None;
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.connected_without(&[u, v]) {
                    return Some(vec![u, v]);
                }
            }
        }
        None
    }

    /// Check every fullerene invariant and report each outcome.
    pub fn validate(&self) -> ValidationReport {
        let order_ok = self.n >= 20 && self.n.is_multiple_of(2);
        let face_sizes_ok = self.faces.iter().all(|f| f.len() == 5 || f.len() == 6);
        let pentagon_count = self.pentagon_count();
        let euler_ok = self.num_faces() == self.n / 2 + 2;
        let faces_proper_ok = self.faces.iter().all(|f| {
            let mut b = f.boundary.clone();
            b.sort_unstable();
            b.dedup();
            b.len() == f.boundary.len() && f.neighbors.iter().all(|&g| g != f.id)
        });
        let cut = self.find_small_cut();
        ValidationReport {
            order_ok,
            face_sizes_ok,
            pentagon_count,
            pentagon_count_ok: pentagon_count == 12,
            euler_ok,
            faces_proper_ok,
            three_connected: cut.is_none(),
            cut,
        }
    }
}

/// Per-invariant outcome of [`FullereneGraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// n is even and at least 20.
    pub order_ok: bool,
    /// every face has size 5 or 6
    pub face_sizes_ok: bool,
    pub pentagon_count: usize,
    /// exactly 12 pentagons
    pub pentagon_count_ok: bool,
    /// face count equals n/2 + 2
    pub euler_ok: bool,
    /// face boundaries are simple and no face borders itself
    pub faces_proper_ok: bool,
    pub three_connected: bool,
    /// a vertex cut of size <= 2, when one exists
    pub cut: Option<Vec<usize>>,
}

impl ValidationReport {
    pub fn all_ok(&self) -> bool {
        self.order_ok
            && self.face_sizes_ok
            && self.pentagon_count_ok
            && self.euler_ok
            && self.faces_proper_ok
            && self.three_connected
    }

    pub fn lines(&self) -> Vec<String> {
        let yn = |b: bool| if b { "pass" } else { "FAIL" };
        let mut out = vec![
            format!("order (even, >= 20): {}", yn(self.order_ok)),
            format!("face sizes in {{5,6}}: {}", yn(self.face_sizes_ok)),
            format!(
                "pentagon count == 12 (found {}): {}",
                self.pentagon_count,
                yn(self.pentagon_count_ok)
            ),
            format!("face count == n/2 + 2: {}", yn(self.euler_ok)),
            format!("faces simple and two-sided: {}", yn(self.faces_proper_ok)),
            format!("3-connected: {}", yn(self.three_connected)),
        ];
        if let Some(cut) = &self.cut {
            out.push(format!("  separating set found: {cut:?}"));
        }
        out
    }
}
