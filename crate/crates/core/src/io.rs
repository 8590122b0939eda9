//! Interchange formats.
//!
//! `planar_code` is the binary format: the ASCII header `>>planar_code<<`,
//! then per graph one byte `n` followed by, for each vertex in order, its
//! neighbors as 1-indexed bytes in rotation order, each list terminated by
//! a zero byte. Only valid for n <= 255; bigger graphs go through the JSON
//! debug format, an object `{"n": .., "rotation": [[..], ..]}` with
//! 0-based ids matching the in-memory representation.

use crate::graph::{FullereneGraph, GraphError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("byte {offset}: missing >>planar_code<< header")]
    MissingHeader { offset: usize },
    #[error("byte {offset}: stream truncated")]
    Truncated { offset: usize },
    #[error("byte {offset}: graph order {n} out of range")]
    BadOrder { offset: usize, n: usize },
    #[error("byte {offset}: neighbor index {index} out of range 1..={n}")]
    NeighborOutOfRange {
        offset: usize,
        index: usize,
        n: usize,
    },
    #[error("byte {offset}: malformed rotation system: {source}")]
    BadRotation {
        offset: usize,
        #[source]
        source: GraphError,
    },
    #[error("byte {offset}: graph is not a fullerene ({reason})")]
    NotFullerene { offset: usize, reason: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EncodeError {
    #[error("graph {index} has {n} vertices; planar_code holds at most 255")]
    TooLarge { index: usize, n: usize },
}

fn first_failure(g: &FullereneGraph) -> Option<String> {
    let r = g.validate();
    if r.all_ok() {
        return None;
    }
    let reason = if !r.order_ok {
        "order must be even and at least 20"
    } else if !r.face_sizes_ok {
        "face of size outside {5,6}"
    } else if !r.pentagon_count_ok {
        "pentagon count differs from 12"
    } else if !r.euler_ok {
        "face count differs from n/2 + 2"
    } else if !r.faces_proper_ok {
        "improper face boundary"
    } else {
        "not 3-connected"
    };
    Some(reason.to_string())
}

fn parse_planar_code_impl(
    bytes: &[u8],
    require_fullerene: bool,
) -> Result<Vec<FullereneGraph>, ParseError> {
    if bytes.len() < PLANAR_CODE_HEADER.len()
        || &bytes[..PLANAR_CODE_HEADER.len()] != PLANAR_CODE_HEADER
    {
        return Err(ParseError::MissingHeader { offset: 0 });
    }
    let mut pos = PLANAR_CODE_HEADER.len();
    let mut graphs = Vec::new();
    while pos < bytes.len() {
        let graph_start = pos;
        let n = bytes[pos] as usize;
        if n == 0 {
            return Err(ParseError::BadOrder { offset: pos, n });
        }
        pos += 1;
        let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n);
        for _ in 0..n {
            let mut neighbors = Vec::with_capacity(3);
            loop {
                let Some(&b) = bytes.get(pos) else {
                    return Err(ParseError::Truncated {
                        offset: bytes.len(),
                    });
                };
                if b == 0 {
                    pos += 1;
                    break;
                }
                if b as usize > n {
                    return Err(ParseError::NeighborOutOfRange {
                        offset: pos,
                        index: b as usize,
                        n,
                    });
                }
                neighbors.push(b as usize - 1);
                pos += 1;
            }
            rotation.push(neighbors);
        }
        let g =
            FullereneGraph::from_rotation(&rotation).map_err(|source| ParseError::BadRotation {
                offset: graph_start,
                source,
            })?;
        if require_fullerene {
            if let Some(reason) = first_failure(&g) {
                return Err(ParseError::NotFullerene {
                    offset: graph_start,
                    reason,
                });
            }
        }
        graphs.push(g);
    }
    Ok(graphs)
}

/// Parse a planar_code stream; every graph must validate as a fullerene.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<FullereneGraph>, ParseError> {
    parse_planar_code_impl(bytes, true)
}

/// Parse without the fullerene validation, so broken candidates can still
/// be loaded and inspected (e.g. by `validate`).
pub fn parse_planar_code_unvalidated(bytes: &[u8]) -> Result<Vec<FullereneGraph>, ParseError> {
    parse_planar_code_impl(bytes, false)
}

pub fn encode_planar_code(graphs: &[FullereneGraph]) -> Result<Vec<u8>, EncodeError> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for (index, g) in graphs.iter().enumerate() {
        if g.n() > 255 {
            return Err(EncodeError::TooLarge { index, n: g.n() });
        }
        out.push(g.n() as u8);
        for v in 0..g.n() {
            for w in g.neighbors(v) {
                out.push(w as u8 + 1);
            }
            out.push(0);
        }
    }
    Ok(out)
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    rotation: Vec<Vec<usize>>,
}

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("\"n\" field is {n} but rotation lists {len} vertices")]
    LengthMismatch { n: usize, len: usize },
    #[error("malformed rotation system: {0}")]
    BadRotation(#[from] GraphError),
}

/// Parse the JSON debug format: one graph object or an array of them.
/// Rotation systems must be well-formed; fullerene validation is left to
/// the caller so that counterexamples can round-trip.
pub fn parse_json(bytes: &[u8]) -> Result<Vec<FullereneGraph>, JsonError> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum OneOrMany {
        One(GraphJson),
        Many(Vec<GraphJson>),
    }
    let parsed: OneOrMany = serde_json::from_slice(bytes)?;
    let items = match parsed {
        OneOrMany::One(g) => vec![g],
        OneOrMany::Many(gs) => gs,
    };
    items
        .into_iter()
        .map(|item| {
            if item.n != item.rotation.len() {
                return Err(JsonError::LengthMismatch {
                    n: item.n,
                    len: item.rotation.len(),
                });
            }
            Ok(FullereneGraph::from_rotation(&item.rotation)?)
        })
        .collect()
}

pub fn encode_json(graphs: &[FullereneGraph]) -> Vec<u8> {
    let items: Vec<GraphJson> = graphs
        .iter()
        .map(|g| GraphJson {
            n: g.n(),
            rotation: g.rotation().iter().map(|r| r.to_vec()).collect(),
        })
        .collect();
    let mut out = if items.len() == 1 {
        serde_json::to_vec_pretty(&items[0]).unwrap()
    } else {
        serde_json::to_vec_pretty(&items).unwrap()
    };
    out.push(b'\n');
    out
}

/// Which on-disk format a byte stream uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    PlanarCode,
    Json,
}

pub fn detect_format(bytes: &[u8]) -> Format {
    if bytes.starts_with(PLANAR_CODE_HEADER) {
        Format::PlanarCode
    } else {
        Format::Json
    }
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    PlanarCode(#[from] ParseError),
    #[error(transparent)]
    Json(#[from] JsonError),
}

/// Load graphs from either format, detected by the header.
pub fn load_graphs(
    bytes: &[u8],
    require_fullerene: bool,
) -> Result<Vec<FullereneGraph>, LoadError> {
    match detect_format(bytes) {
        Format::PlanarCode => Ok(parse_planar_code_impl(bytes, require_fullerene)?),
        Format::Json => Ok(parse_json(bytes)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{buckyball, nanotube};

    #[test]
    fn encode_parse_round_trip_is_byte_identical() {
        let graphs = vec![nanotube(0), nanotube(1), buckyball()];
        let bytes = encode_planar_code(&graphs).unwrap();
        let parsed = parse_planar_code(&bytes).unwrap();
        assert_eq!(parsed.len(), 3);
        for (a, b) in graphs.iter().zip(&parsed) {
            assert_eq!(a.rotation(), b.rotation());
        }
        let re = encode_planar_code(&parsed).unwrap();
        assert_eq!(bytes, re);
    }

    #[test]
    fn header_only_stream_is_empty() {
        assert!(parse_planar_code(PLANAR_CODE_HEADER).unwrap().is_empty());
    }

    #[test]
    fn missing_header_is_reported_at_offset_zero() {
        assert_eq!(
            parse_planar_code(b"garbage").unwrap_err(),
            ParseError::MissingHeader { offset: 0 }
        );
    }

    #[test]
    fn missing_terminator_reports_offset() {
        let bytes = encode_planar_code(&[nanotube(0)]).unwrap();
        // drop the final 0 terminator: the last vertex list never closes,
        // so the parser runs off the end of the stream
        let truncated = &bytes[..bytes.len() - 1];
        assert_eq!(
            parse_planar_code(truncated).unwrap_err(),
            ParseError::Truncated {
                offset: truncated.len()
            }
        );
    }

    #[test]
    fn neighbor_out_of_range_reports_offset() {
        let mut bytes = encode_planar_code(&[nanotube(0)]).unwrap();
        let bad_pos = PLANAR_CODE_HEADER.len() + 1; // first neighbor byte
        bytes[bad_pos] = 200;
        assert_eq!(
            parse_planar_code(&bytes).unwrap_err(),
            ParseError::NeighborOutOfRange {
                offset: bad_pos,
                index: 200,
                n: 20
            }
        );
    }

    #[test]
    fn non_fullerene_is_rejected_with_offset() {
        // encode an 8-vertex cube by hand: all faces are squares
        let cube: Vec<Vec<usize>> = vec![
            vec![3, 4, 1],
            vec![0, 5, 2],
            vec![1, 6, 3],
            vec![2, 7, 0],
            vec![0, 7, 5],
            vec![1, 4, 6],
            vec![5, 7, 2],
            vec![4, 3, 6],
        ];
        let mut bytes = PLANAR_CODE_HEADER.to_vec();
        bytes.push(8);
        for neigh in &cube {
            for &w in neigh {
                bytes.push(w as u8 + 1);
            }
            bytes.push(0);
        }
        let err = parse_planar_code(&bytes).unwrap_err();
        assert!(matches!(
            err,
            ParseError::NotFullerene { offset, .. } if offset == PLANAR_CODE_HEADER.len()
        ));
        // but the lenient path loads it for inspection
        let gs = parse_planar_code_unvalidated(&bytes).unwrap();
        assert_eq!(gs.len(), 1);
        assert!(!gs[0].validate().all_ok());
    }

    #[test]
    fn json_round_trip() {
        let g = nanotube(2);
        let bytes = encode_json(std::slice::from_ref(&g));
        let parsed = parse_json(&bytes).unwrap();
        assert_eq!(parsed.len(), 1);
        assert_eq!(parsed[0].rotation(), g.rotation());
        assert_eq!(detect_format(&bytes), Format::Json);
    }
}
