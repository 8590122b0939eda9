//! Vertex and face coloring relative to a cycle, structural checks, and the
//! face-traversal pattern catalogue.
//!
//! A vertex on the cycle is black, a vertex off it is white. A face is
//! black when none of its boundary vertices are white, single-white with
//! one, and white with exactly two; more than two only ever happens for
//! cycles that are not longest, so it gets its own class.

use crate::cycle::CycleState;
use crate::graph::FullereneGraph;
use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceClass {
    Black,
    SingleWhite,
    White,
    /// three or more whites; impossible for longest cycles
    Excess(u8),
}

#[derive(Debug, Clone)]
pub struct FaceColoring {
    vertex_white: Vec<bool>,
    face_whites: Vec<Vec<usize>>,
    white_count: usize,
}

impl FaceColoring {
    pub fn is_white(&self, v: usize) -> bool {
        self.vertex_white[v]
    }

    pub fn white_count(&self) -> usize {
        self.white_count
    }

    pub fn whites(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertex_white
            .iter()
            .enumerate()
            .filter_map(|(v, &w)| w.then_some(v))
    }

    /// White vertices on the boundary of face `f`.
    pub fn face_whites(&self, f: usize) -> &[usize] {
        &self.face_whites[f]
    }

    pub fn face_class(&self, f: usize) -> FaceClass {
        match self.face_whites[f].len() {
            0 => FaceClass::Black,
            1 => FaceClass::SingleWhite,
            2 => FaceClass::White,
            k => FaceClass::Excess(k as u8),
        }
    }
}

/// Color vertices and faces of `g` relative to the cycle `c`.
pub fn color(g: &FullereneGraph, c: &CycleState) -> FaceColoring {
    let vertex_white: Vec<bool> = (0..g.n()).map(|v| !c.contains_vertex(v)).collect();
    let face_whites = g
        .faces()
        .iter()
        .map(|f| {
            f.boundary
                .iter()
                .copied()
                .filter(|&v| vertex_white[v])
                .collect()
        })
        .collect();
    let white_count = vertex_white.iter().filter(|&&w| w).count();
    FaceColoring {
        vertex_white,
        face_whites,
        white_count,
    }
}

/// Three white vertices forming a path `a - mid - b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhitePathWitness {
    pub path: [usize; 3],
}

/// First path of three white vertices, scanning middles in ascending order;
/// `None` means the check passes.
pub fn check_no_white_p3(g: &FullereneGraph, coloring: &FaceColoring) -> Option<WhitePathWitness> {
    for mid in 0..g.n() {
        if !coloring.is_white(mid) {
            continue;
        }
        let white_neighbors: Vec<usize> = g
            .neighbors(mid)
            .into_iter()
            .filter(|&w| coloring.is_white(w))
            .collect();
        if white_neighbors.len() >= 2 {
            return Some(WhitePathWitness {
                path: [white_neighbors[0], mid, white_neighbors[1]],
            });
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteFaceWitness {
    pub face: usize,
    pub whites: Vec<usize>,
}

/// First pentagon with two or more white vertices; `None` means pass.
pub fn check_no_white_pentagon(
    g: &FullereneGraph,
    coloring: &FaceColoring,
) -> Option<WhiteFaceWitness> {
    g.faces()
        .iter()
        .find(|f| f.is_pentagon() && coloring.face_whites(f.id).len() >= 2)
        .map(|f| WhiteFaceWitness {
            face: f.id,
            whites: coloring.face_whites(f.id).to_vec(),
        })
}

/// First face with three or more white vertices; `None` means pass.
pub fn check_max_two_whites_per_face(
    g: &FullereneGraph,
    coloring: &FaceColoring,
) -> Option<WhiteFaceWitness> {
    g.faces()
        .iter()
        .find(|f| coloring.face_whites(f.id).len() > 2)
        .map(|f| WhiteFaceWitness {
            face: f.id,
            whites: coloring.face_whites(f.id).to_vec(),
        })
}

/// Every structural violation at once, for flagging reroute regions.
#[derive(Debug, Clone, Default)]
pub struct Violations {
    pub white_pentagons: Vec<usize>,
    pub excess_faces: Vec<usize>,
    pub white_paths: Vec<[usize; 3]>,
}

impl Violations {
    pub fn is_empty(&self) -> bool {
        self.white_pentagons.is_empty()
            && self.excess_faces.is_empty()
            && self.white_paths.is_empty()
    }
}

pub fn violations(g: &FullereneGraph, coloring: &FaceColoring) -> Violations {
    let mut out = Violations::default();
    for f in g.faces() {
        let whites = coloring.face_whites(f.id).len();
        if f.is_pentagon() && whites >= 2 {
            out.white_pentagons.push(f.id);
        }
        if whites > 2 {
            out.excess_faces.push(f.id);
        }
    }
    for mid in 0..g.n() {
        if !coloring.is_white(mid) {
            continue;
        }
        let wn: Vec<usize> = g
            .neighbors(mid)
            .into_iter()
            .filter(|&w| coloring.is_white(w))
            .collect();
        if wn.len() >= 2 {
            out.white_paths.push([wn[0], mid, wn[1]]);
        }
    }
    out
}

/// One boundary position of a traversal word: vertex is black, and the
/// boundary edge leaving it lies on the cycle.
pub type WordLetter = (bool, bool);

/// How the cycle traverses one face, up to rotation and reflection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraversalPattern {
    pub face: usize,
    pub word: Vec<WordLetter>,
    pub canonical: Vec<WordLetter>,
    /// Index into the catalogue of locally feasible classes; `None` means
    /// even the local constraints are violated.
    pub catalogue_id: Option<usize>,
    /// False when the pattern cannot occur on a longest cycle: it is
    /// outside the catalogue, or it is the white-pentagon class, which is
    /// locally feasible but always improvable by the segment swap.
    pub longest_feasible: bool,
}

fn reflect(word: &[WordLetter]) -> Vec<WordLetter> {
    let k = word.len();
    (0..k)
        .map(|j| (word[(k - j) % k].0, word[(2 * k - j - 1) % k].1))
        .collect()
}

fn rotations(word: &[WordLetter]) -> impl Iterator<Item = Vec<WordLetter>> + '_ {
    let k = word.len();
    (0..k).map(move |r| (0..k).map(|i| word[(i + r) % k]).collect())
}

/// Lexicographically least rotation of the word or its reflection.
pub fn canonical_word(word: &[WordLetter]) -> Vec<WordLetter> {
    let refl = reflect(word);
    rotations(word)
        .chain(rotations(&refl))
        .min()
        .expect("non-empty word")
}

/// The feasible traversal words for one face size, derived from the local
/// constraints a cycle imposes on a cubic graph:
///
/// * an edge on the cycle ends in two black vertices;
/// * a white vertex has no incident cycle edge at all;
/// * a black vertex uses at least one of its two boundary edges (it has
///   exactly one edge off this face, which covers at most one of its two
///   cycle edges);
/// * no three consecutive white vertices;
/// * not every boundary edge is on the cycle (the cycle would close into
///   the face boundary itself).
fn enumerate_words(k: usize) -> Vec<Vec<WordLetter>> {
    let mut canon: Vec<Vec<WordLetter>> = Vec::new();
    for colors in 0u32..(1 << k) {
        let black = |i: usize| colors >> (i % k) & 1 != 0;
        'edges: for edges in 0u32..(1 << k) {
            let on = |i: usize| edges >> (i % k) & 1 != 0;
            if edges == (1 << k) - 1 {
                continue;
            }
            for i in 0..k {
                if on(i) && (!black(i) || !black(i + 1)) {
                    continue 'edges;
                }
                if black(i) && !on(i) && !on((i + k - 1) % k) {
                    continue 'edges;
                }
                if !black(i) && !black((i + 1) % k) && !black((i + 2) % k) {
                    continue 'edges;
                }
            }
            let word: Vec<WordLetter> = (0..k).map(|i| (black(i), on(i))).collect();
            let c = canonical_word(&word);
            if !canon.contains(&c) {
                canon.push(c);
            }
        }
    }
    canon.sort();
    canon
}

/// Catalogue of feasible face-traversal classes for pentagons and hexagons.
#[derive(Debug)]
pub struct PatternCatalogue {
    pub pentagon: Vec<Vec<WordLetter>>,
    pub hexagon: Vec<Vec<WordLetter>>,
}

impl PatternCatalogue {
    /// Global id: pentagons first, then hexagons.
    pub fn id_of(&self, canonical: &[WordLetter]) -> Option<usize> {
        match canonical.len() {
            5 => self.pentagon.iter().position(|w| w == canonical),
            6 => self
                .hexagon
                .iter()
                .position(|w| w == canonical)
                .map(|i| self.pentagon.len() + i),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.pentagon.len() + self.hexagon.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The catalogue is generated once by exhaustive enumeration rather than
/// transcribed from a drawing, so it can be re-derived and checked.
pub fn pattern_catalogue() -> &'static PatternCatalogue {
    static CATALOGUE: OnceLock<PatternCatalogue> = OnceLock::new();
    CATALOGUE.get_or_init(|| PatternCatalogue {
        pentagon: enumerate_words(5),
        hexagon: enumerate_words(6),
    })
}

/// Classify how `c` traverses the given face.
pub fn classify_pattern(
    g: &FullereneGraph,
    face: usize,
    coloring: &FaceColoring,
    c: &CycleState,
) -> TraversalPattern {
    let f = g.face(face);
    let word: Vec<WordLetter> = (0..f.len())
        .map(|i| {
            let (u, v) = f.edge(i);
            (!coloring.is_white(u), c.contains_edge(g, u, v))
        })
        .collect();
    let canonical = canonical_word(&word);
    let catalogue_id = pattern_catalogue().id_of(&canonical);
    let whites = word.iter().filter(|&&(black, _)| !black).count();
    let longest_feasible = catalogue_id.is_some() && !(f.is_pentagon() && whites >= 2);
    TraversalPattern {
        face,
        word,
        canonical,
        catalogue_id,
        longest_feasible,
    }
}
