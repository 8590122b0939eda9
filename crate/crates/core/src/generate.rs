//! Deterministic fullerene generators.
//!
//! Labelings are fixed so repeated runs produce byte-identical encodings.

use crate::graph::FullereneGraph;

/// The (5,0) nanotube fullerene with `k` rings of five hexagons between two
/// caps of six pentagons each; `n = 20 + 10k`. `k = 0` is the dodecahedron.
///
/// Layout, innermost to outermost in the planar drawing: a central pentagon
/// (vertices `0..5`), `k + 1` rings of ten vertices, and a closing pentagon.
/// Ring `j` carries inward spokes on positions of parity `(j - 1) % 2` and
/// outward spokes on the opposite parity.
#[allow(clippy::needless_range_loop)] // positions double as ring arithmetic
pub fn nanotube(k: usize) -> FullereneGraph {
    let rings = k + 1;
    let n = 20 + 10 * k;
    let ring = |j: usize, p: usize| 5 + (j - 1) * 10 + (p % 10);
    let outer = |i: usize| 5 + rings * 10 + (i % 5);

    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];

    // central pentagon: clockwise order [outward spoke, previous, next]
    for i in 0..5 {
        rotation[i] = vec![ring(1, 2 * i), (i + 4) % 5, (i + 1) % 5];
    }
    // rings
    for j in 1..=rings {
        for p in 0..10 {
            let prev = ring(j, p + 9);
            let next = ring(j, p + 1);
            let spoke_in_here = p % 2 == (j - 1) % 2;
            let v = ring(j, p);
            if spoke_in_here {
                let inw = if j == 1 {
                    debug_assert_eq!(p % 2, 0);
                    p / 2
                } else {
                    ring(j - 1, p)
                };
                rotation[v] = vec![prev, inw, next];
            } else {
                let outw = if j == rings {
                    debug_assert_eq!(p % 2, rings % 2);
                    outer((p - rings % 2) / 2)
                } else {
                    ring(j + 1, p)
                };
                rotation[v] = vec![outw, prev, next];
            }
        }
    }
    // closing pentagon: [previous, inward spoke, next]
    for i in 0..5 {
        rotation[outer(i)] = vec![outer(i + 4), ring(rings, 2 * i + rings % 2), outer(i + 1)];
    }

    FullereneGraph::from_rotation(&rotation).expect("nanotube rotation is well-formed")
}

// north pole 0, upper ring 1..=5, lower ring 6..=10, south pole 11;
// neighbor lists clockwise as seen from outside the sphere
const ICOSAHEDRON: [[usize; 5]; 12] = [
    [1, 2, 3, 4, 5],
    [5, 10, 6, 2, 0],
    [1, 6, 7, 3, 0],
    [2, 7, 8, 4, 0],
    [3, 8, 9, 5, 0],
    [4, 9, 10, 1, 0],
    [10, 11, 7, 2, 1],
    [6, 11, 8, 3, 2],
    [7, 11, 9, 4, 3],
    [8, 11, 10, 5, 4],
    [9, 11, 6, 1, 5],
    [10, 9, 8, 7, 6],
];

/// The truncated icosahedron (icosahedral C60): every vertex of the
/// icosahedron becomes a pentagon, every triangle a hexagon, so no two
/// pentagons share an edge.
pub fn buckyball() -> FullereneGraph {
    // corner (v, s) of the pentagon replacing icosahedron vertex v,
    // sitting on the edge towards ICOSAHEDRON[v][s]
    let id = |v: usize, s: usize| 5 * v + s % 5;
    let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(60);
    for (v, row) in ICOSAHEDRON.iter().enumerate() {
        for (s, &u) in row.iter().enumerate() {
            let back = ICOSAHEDRON[u].iter().position(|&x| x == v).unwrap();
            rotation.push(vec![id(u, back), id(v, s + 1), id(v, s + 4)]);
        }
    }
    FullereneGraph::from_rotation(&rotation).expect("truncation is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::trace_faces;

    #[test]
    fn icosahedron_table_traces_to_twenty_triangles() {
        let rotation: Vec<Vec<usize>> = ICOSAHEDRON.iter().map(|r| r.to_vec()).collect();
        // trace_faces wants cubic input, so walk the permutation directly
        let n = 12;
        let slot = |u: usize, v: usize| rotation[u].iter().position(|&x| x == v).unwrap();
        let mut seen = vec![[false; 5]; n];
        let mut sizes = Vec::new();
        for v0 in 0..n {
            for s0 in 0..5 {
                if seen[v0][s0] {
                    continue;
                }
                let (mut u, mut s) = (v0, s0);
                let mut len = 0;
                loop {
                    seen[u][s] = true;
                    len += 1;
                    let v = rotation[u][s];
                    let s_next = (slot(v, u) + 4) % 5;
                    u = v;
                    s = s_next;
                    if (u, s) == (v0, s0) {
                        break;
                    }
                }
                sizes.push(len);
            }
        }
        assert_eq!(sizes.len(), 20);
        assert!(sizes.iter().all(|&s| s == 3));
    }

    #[test]
    fn dodecahedron_is_nanotube_zero() {
        let g = nanotube(0);
        assert_eq!(g.n(), 20);
        assert_eq!(g.num_faces(), 12);
        assert_eq!(g.pentagon_count(), 12);
        assert!(g.validate().all_ok());
    }

    #[test]
    fn nanotube_face_counts() {
        for k in [1usize, 2, 4] {
            let g = nanotube(k);
            assert_eq!(g.n(), 20 + 10 * k);
            assert_eq!(g.num_faces(), g.n() / 2 + 2);
            assert_eq!(g.pentagon_count(), 12);
            let hexes = g.faces().iter().filter(|f| f.is_hexagon()).count();
            assert_eq!(hexes, 5 * k);
            assert!(g.validate().all_ok());
        }
    }

    #[test]
    fn buckyball_structure() {
        let g = buckyball();
        assert_eq!(g.n(), 60);
        assert_eq!(g.num_faces(), 32);
        assert_eq!(g.pentagon_count(), 12);
        assert!(g.validate().all_ok());
        // no two pentagons share an edge
        for f in g.faces() {
            if f.is_pentagon() {
                for &nb in &f.neighbors {
                    assert!(g.face(nb).is_hexagon());
                }
            }
        }
    }

    #[test]
    fn trace_faces_on_perturbed_dodecahedron() {
        // reversing one neighbor list flips local orientation: the rotation
        // stays well-formed but the embedding is no longer spherical
        let g = nanotube(0);
        let mut rotation: Vec<Vec<usize>> = g.rotation().iter().map(|r| r.to_vec()).collect();
        rotation[7].reverse();
        let faces = trace_faces(&rotation).unwrap();
        let total: usize = faces.iter().map(|f| f.len()).sum();
        assert_eq!(total, 60);
        let perturbed = FullereneGraph::from_rotation(&rotation).unwrap();
        assert!(!perturbed.validate().all_ok());
    }
}
