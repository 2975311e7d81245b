//! Graph file formats: graph6, edge lists and JSON adjacency lists.

use std::fmt;
use std::str::FromStr;

use cgraph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edgelist,
    Json,
}

impl GraphFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphFormat::Graph6 => "graph6",
            GraphFormat::Edgelist => "edgelist",
            GraphFormat::Json => "json",
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A serialized graph together with its format tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub format: GraphFormat,
    pub payload: Vec<u8>,
}

impl GraphFile {
    pub fn encode(g: &Graph, format: GraphFormat) -> Self {
        let payload = match format {
            GraphFormat::Graph6 => {
                let mut p = emit_graph6(g);
                p.push(b'\n');
                p
            }
            GraphFormat::Edgelist => emit_edgelist(g).into_bytes(),
            GraphFormat::Json => emit_json(g).into_bytes(),
        };
        GraphFile { format, payload }
    }

    pub fn decode(&self) -> Result<Graph, FormatError> {
        match self.format {
            GraphFormat::Graph6 => {
                let bytes = self.payload.strip_suffix(b"\n").unwrap_or(&self.payload);
                let bytes = bytes.strip_suffix(b"\r").unwrap_or(bytes);
                Ok(parse_graph6(bytes)?)
            }
            GraphFormat::Edgelist => {
                let text = std::str::from_utf8(&self.payload).map_err(|e| FormatError::Utf8(e.to_string()))?;
                parse_edgelist(text)
            }
            GraphFormat::Json => {
                let text = std::str::from_utf8(&self.payload).map_err(|e| FormatError::Utf8(e.to_string()))?;
                parse_json(text)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("bad graph6 size header at byte {offset}: {reason}")]
    BadHeader { offset: usize, reason: &'static str },
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    OutOfRange { offset: usize, byte: u8 },
    #[error("graph6 body truncated: {n} vertices need {expected} bytes, found {found}")]
    Truncated { n: usize, expected: usize, found: usize },
    #[error("trailing bytes after graph6 body starting at offset {offset}")]
    TrailingBytes { offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonZeroPadding { offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("json graph: {0}")]
    Json(String),
    #[error("input is not valid UTF-8: {0}")]
    Utf8(String),
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Self as clap::ValueEnum>::from_str(s, true)
    }
}

const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= SHORT_MAX {
        out.push(n as u8 + BIAS);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64 >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Canonical graph6 encoding (no trailing newline).
pub fn emit_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + body_len(n));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    out
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    let b = bytes[offset];
    if !(63..=126).contains(&b) {
        return Err(Graph6Error::OutOfRange { offset, byte: b });
    }
    Ok(u64::from(b - BIAS))
}

fn read_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    sextet(bytes, 0)?;
    if first != 126 {
        return Ok((usize::from(first - BIAS), 1));
    }
    let (start, width) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    if bytes.len() < start + width {
        return Err(Graph6Error::BadHeader {
            offset: bytes.len(),
            reason: "size header is cut short",
        });
    }
    let mut n = 0u64;
    for offset in start..start + width {
        n = (n << 6) | sextet(bytes, offset)?;
    }
    let n = usize::try_from(n).map_err(|_| Graph6Error::BadHeader {
        offset: 0,
        reason: "vertex count does not fit in memory",
    })?;
    Ok((n, start + width))
}

pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let (n, header) = read_size(bytes)?;
    let expected = body_len(n);
    let found = bytes.len() - header;
    for offset in header..bytes.len().min(header + expected) {
        sextet(bytes, offset)?;
    }
    if found < expected {
        return Err(Graph6Error::Truncated { n, expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingBytes {
            offset: header + expected,
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[header + bit / 6] - BIAS;
            if byte & (0x20 >> (bit % 6)) != 0 {
                g.set_edge(i, j, true);
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let offset = header + bit / 6;
        let used = bit % 6;
        if (bytes[offset] - BIAS) & (0x3f >> used) != 0 {
            return Err(Graph6Error::NonZeroPadding { offset });
        }
    }
    Ok(g)
}

/// `# vertices N` followed by one `u v` line per edge, 0-indexed.
pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("# vertices {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses `u v` lines. Blank lines and `#` comments are skipped; a
/// `# vertices N` comment fixes the order, otherwise it is one past the
/// largest index seen.
pub fn parse_edgelist(text: &str) -> Result<Graph, FormatError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |reason: String| FormatError::EdgeList { line: line_no, reason };
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some("vertices") {
                let n = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| err("malformed vertex count".into()))?;
                declared = Some(n);
            }
            continue;
        }
        let ends: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = ends[..] else {
            return Err(err(format!("expected two vertex indices, got {:?}", line)));
        };
        let parse = |t: &str| t.parse::<usize>().map_err(|_| err(format!("bad vertex index {t:?}")));
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        if let Some(n) = declared {
            if u.max(v) >= n {
                return Err(err(format!("vertex {} exceeds declared order {n}", u.max(v))));
            }
        }
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, &edges).map_err(|e| FormatError::EdgeList {
        line: 0,
        reason: e.to_string(),
    })
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    order: usize,
    adjacency: Vec<Vec<usize>>,
}

/// `{"order": n, "adjacency": [[neighbours of 0], ...]}`.
pub fn emit_json(g: &Graph) -> String {
    let doc = JsonGraph {
        order: g.order(),
        adjacency: (0..g.order()).map(|v| g.neighbors(v).collect()).collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("serializable");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<Graph, FormatError> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    if doc.adjacency.len() != doc.order {
        return Err(FormatError::Json(format!(
            "order is {} but {} adjacency lists were given",
            doc.order,
            doc.adjacency.len()
        )));
    }
    let mut g = Graph::empty(doc.order);
    for (u, nbrs) in doc.adjacency.iter().enumerate() {
        for &v in nbrs {
            if v >= doc.order {
                return Err(FormatError::Json(format!(
                    "vertex {u} lists out-of-range neighbour {v}"
                )));
            }
            if v == u {
                return Err(FormatError::Json(format!("self-loop at vertex {u}")));
            }
            if !doc.adjacency[v].contains(&u) {
                return Err(FormatError::Json(format!("edge {u}-{v} is not listed symmetrically")));
            }
            g.set_edge(u, v, true);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cgraph::{build_cgraph, Composition};
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(emit_graph6(&Graph::complete(2)), b"A_");
        assert_eq!(emit_graph6(&Graph::empty(0)), b"?");
        assert_eq!(emit_graph6(&Graph::complete(3)), b"Bw");
        // petgraph's 5-vertex reference: edges a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), b"DQc");
        assert_eq!(parse_graph6(b"DQc").unwrap(), g);
    }

    #[test]
    fn size_headers() {
        let g = Graph::empty(63);
        let bytes = emit_graph6(&g);
        // 63 = 000000 000000 111111
        assert_eq!(&bytes[..4], &[126, 63, 63, 126]);
        assert_eq!(parse_graph6(&bytes).unwrap(), g);
        let mut long = vec![126, 126];
        long.extend([63, 63, 63, 63, 63, 63 + 5, 63, 63]);
        assert_eq!(parse_graph6(&long).unwrap().order(), 5);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6(b" "),
            Err(Graph6Error::OutOfRange { offset: 0, byte: b' ' })
        );
        assert_eq!(
            parse_graph6(b"A\x7f"),
            Err(Graph6Error::OutOfRange { offset: 1, byte: 0x7f })
        );
        assert!(matches!(parse_graph6(b"~?"), Err(Graph6Error::BadHeader { .. })));
        assert_eq!(
            parse_graph6(b"B"),
            Err(Graph6Error::Truncated {
                n: 3,
                expected: 1,
                found: 0
            })
        );
        assert_eq!(parse_graph6(b"A_?"), Err(Graph6Error::TrailingBytes { offset: 2 }));
        assert_eq!(parse_graph6(b"A`"), Err(Graph6Error::NonZeroPadding { offset: 1 }));
    }

    #[test]
    fn ten_vertex_graph_round_trip() {
        let c = Composition::new(vec![3, 2, 2, 3]).unwrap();
        let (g, _) = build_cgraph(&c).unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        for format in [GraphFormat::Graph6, GraphFormat::Edgelist, GraphFormat::Json] {
            assert_eq!(GraphFile::encode(&g, format).decode().unwrap(), g, "{format}");
        }
    }

    #[test]
    fn edgelist_parsing() {
        let g = parse_edgelist("# a triangle\n0 1\n1 2\n\n0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        let g = parse_edgelist("# vertices 4\n0 1\n").unwrap();
        assert_eq!(g.order(), 4);
        assert!(matches!(
            parse_edgelist("0 1 2\n"),
            Err(FormatError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edgelist("0 x\n"),
            Err(FormatError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edgelist("1 1\n"),
            Err(FormatError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edgelist("# vertices 2\n0 2\n"),
            Err(FormatError::EdgeList { line: 2, .. })
        ));
    }

    #[test]
    fn json_parsing() {
        assert_eq!(
            emit_json(&Graph::complete(2)),
            "{\"order\":2,\"adjacency\":[[1],[0]]}\n"
        );
        assert!(parse_json("{\"order\":2,\"adjacency\":[[1],[]]}").is_err());
        assert!(parse_json("{\"order\":3,\"adjacency\":[[1],[0]]}").is_err());
        assert!(parse_json("{\"order\":1,\"adjacency\":[[0]]}").is_err());
        assert!(parse_json("not json").is_err());
    }

    #[test]
    fn all_small_c_graphs_round_trip() {
        for c in Composition::all_even_up_to(12) {
            let (g, _) = build_cgraph(&c).unwrap();
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g, "{c}");
        }
    }

    fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        g.set_edge(u, v, bits[u * n + v]);
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]
        #[test]
        fn graph6_round_trip(g in random_graph(20)) {
            prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        }

        #[test]
        fn edgelist_and_json_round_trip(g in random_graph(12)) {
            prop_assert_eq!(parse_edgelist(&emit_edgelist(&g)).unwrap(), g.clone());
            prop_assert_eq!(parse_json(&emit_json(&g)).unwrap(), g);
        }
    }
}
