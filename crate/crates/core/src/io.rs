//! graph6 and edge-list codecs, and the report and trace documents printed by
//! the command-line tool.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::CanonicalFamilyParams;
use crate::enumeration::{SweepConfig, SweepOutcome, VerificationReport};
use crate::graph::{Graph, Vertex};
use crate::transforms::{ReductionTrace, Rule, WienerClaim};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    CharOutOfRange { offset: usize, byte: u8 },
    #[error("malformed size prefix")]
    MalformedLength,
    #[error("graph of order {order} needs {expected} data bytes, found {found}")]
    WrongLength {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("padding bits after the adjacency data are not zero")]
    TrailingBits,
}

fn sextet(offset: usize, byte: u8) -> Result<u64, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(u64::from(byte - 63))
    } else {
        Err(Graph6Error::CharOutOfRange { offset, byte })
    }
}

/// Decodes one graph6 line. A trailing newline and the optional `>>graph6<<`
/// header are accepted.
pub fn parse_graph6(input: &[u8]) -> Result<Graph, Graph6Error> {
    let mut bytes = input.strip_suffix(b"\n").unwrap_or(input);
    bytes = bytes.strip_suffix(b"\r").unwrap_or(bytes);
    bytes = bytes.strip_prefix(GRAPH6_HEADER.as_bytes()).unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        sextet(offset, byte)?;
    }

    let (order, data) = if bytes[0] != 126 {
        (bytes[0] as usize - 63, &bytes[1..])
    } else if bytes.get(1) != Some(&126) {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedLength);
        }
        let n = bytes[1..4].iter().fold(0u64, |acc, &b| acc << 6 | u64::from(b - 63));
        (n as usize, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedLength);
        }
        let n = bytes[2..8].iter().fold(0u64, |acc, &b| acc << 6 | u64::from(b - 63));
        (
            usize::try_from(n).map_err(|_| Graph6Error::MalformedLength)?,
            &bytes[8..],
        )
    };

    let bits = order * order.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength {
            order,
            expected,
            found: data.len(),
        });
    }

    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::TrailingBits);
    }
    Ok(Graph::from_edges(order, &edges).expect("graph6 edges are simple"))
}

/// Minimal-length graph6 encoding, without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|k| (n >> (6 * k) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| (n >> (6 * k) & 63) as u8 + 63));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: expected two non-negative integers")]
    Syntax { line: usize },
    #[error("missing \"n m\" header line")]
    MissingHeader,
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { line: usize, vertex: Vertex, order: usize },
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(EdgeListError::Syntax { line }),
    }
}

/// Parses `"n m"` followed by `m` lines `"u v"` with 0-based ids. Blank lines
/// and lines starting with `#` are skipped.
pub fn parse_edgelist(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (order, size) = pair(hline, header)?;

    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(size);
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        if let Some(vertex) = [u, v].into_iter().find(|&w| w >= order) {
            return Err(EdgeListError::VertexOutOfRange { line, vertex, order });
        }
        if u == v {
            return Err(EdgeListError::SelfLoop { line, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(EdgeListError::DuplicateEdge { line, u, v });
        }
        edges.push((u, v));
    }
    if edges.len() != size {
        return Err(EdgeListError::EdgeCount {
            expected: size,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(order, &edges).expect("edges validated above"))
}

/// `"n m"` then one `"u v"` line per edge with `u < v`, sorted.
pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("edge list: {0}")]
    EdgeList(#[from] EdgeListError),
}

/// A graph together with its serialized form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub format: GraphFormat,
    pub payload: String,
    pub graph: Graph,
}

impl GraphDocument {
    pub fn encode(graph: Graph, format: GraphFormat) -> Self {
        let payload = match format {
            GraphFormat::Graph6 => emit_graph6(&graph) + "\n",
            GraphFormat::Edgelist => emit_edgelist(&graph),
        };
        GraphDocument { format, payload, graph }
    }

    pub fn decode(payload: &str, format: GraphFormat) -> Result<Self, ParseError> {
        let graph = match format {
            GraphFormat::Graph6 => parse_graph6(payload.trim().as_bytes())?,
            GraphFormat::Edgelist => parse_edgelist(payload)?,
        };
        Ok(GraphDocument {
            format,
            payload: payload.to_owned(),
            graph,
        })
    }

    /// Edge lists start with a line of two integers; anything else is graph6.
    pub fn sniff(payload: &str) -> GraphFormat {
        let first = payload
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'));
        match first {
            Some(l) if l.split_whitespace().count() == 2 => GraphFormat::Edgelist,
            _ => GraphFormat::Graph6,
        }
    }
}

/// One row of a verification report. Field set and order are the report schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: usize,
    pub g: usize,
    pub beta: usize,
    pub class_size: usize,
    pub min_wiener: Option<u64>,
    pub wiener_gstar_direct: Option<u64>,
    pub formula_value: Option<i64>,
    pub gstar_is_unique_min: bool,
    pub formula_matches_direct: bool,
}

impl From<&VerificationReport> for ReportRow {
    fn from(r: &VerificationReport) -> Self {
        ReportRow {
            n: r.n,
            g: r.g,
            beta: r.beta,
            class_size: r.class_size,
            min_wiener: r.min_wiener,
            wiener_gstar_direct: r.wiener_gstar_direct,
            formula_value: r.formula_value,
            gstar_is_unique_min: r.gstar_is_unique_min,
            formula_matches_direct: r.formula_matches_direct,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepParameters {
    pub max_n: usize,
    pub girths: Vec<usize>,
    pub strict_hypothesis: bool,
}

/// Full verification report. Worker count and timing are deliberately not part
/// of the document so reports are reproducible byte for byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub parameters: SweepParameters,
    pub rows: Vec<ReportRow>,
    /// `(n, g, beta)` of hypothesis classes where the extremal claim failed.
    pub violations: Vec<(usize, usize, usize)>,
}

impl ReportDocument {
    pub fn new(cfg: &SweepConfig, outcome: &SweepOutcome) -> Self {
        let mut girths = cfg.girths.clone();
        girths.sort_unstable();
        girths.dedup();
        let mut rows: Vec<ReportRow> = outcome.reports.iter().map(ReportRow::from).collect();
        rows.sort_by_key(|r| (r.n, r.g, r.beta));
        ReportDocument {
            schema_version: REPORT_SCHEMA_VERSION,
            parameters: SweepParameters {
                max_n: cfg.max_n,
                girths,
                strict_hypothesis: cfg.require_hypothesis,
            },
            rows,
            violations: outcome.violations.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Rows only, one header line plus one line per row.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
    }
}

pub fn rows_from_csv(text: &str) -> Result<Vec<ReportRow>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: Rule,
    pub graph6: String,
    pub wiener_before: u64,
    pub wiener_after: u64,
    pub beta_before: usize,
    pub beta_after: usize,
    pub claim: WienerClaim,
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceDocument {
    pub initial: String,
    pub steps: Vec<TraceStep>,
    pub final_graph6: String,
    pub final_params: CanonicalFamilyParams,
}

impl From<&ReductionTrace> for TraceDocument {
    fn from(t: &ReductionTrace) -> Self {
        TraceDocument {
            initial: emit_graph6(&t.initial),
            steps: t
                .steps
                .iter()
                .map(|s| TraceStep {
                    rule: s.rule,
                    graph6: emit_graph6(&s.result),
                    wiener_before: s.wiener_before,
                    wiener_after: s.wiener_after,
                    beta_before: s.beta_before,
                    beta_after: s.beta_after,
                    claim: s.claim,
                    strict: s.strict(),
                })
                .collect(),
            final_graph6: emit_graph6(&t.final_graph),
            final_params: t.final_params.clone(),
        }
    }
}
