//! File formats: graphs as JSON or edge lists, witnesses, interval models
//! and box representations as JSON, graphs as DOT, and 1- or 2-dimensional
//! box representations as SVG. All emitters are deterministic.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::realization::{BoxRepresentation, Interval, IntervalRealization};
use crate::witness::WitnessFamily;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    /// JSON when the first non-blank character is `{`, edge list otherwise.
    #[default]
    Auto,
    Json,
    EdgeList,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Self::Auto),
            "json" => Ok(Self::Json),
            "edgelist" | "txt" => Ok(Self::EdgeList),
            other => Err(Error::Unsupported(format!("graph format `{other}`"))),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

pub fn parse_graph(bytes: &[u8], format: GraphFormat) -> Result<Graph> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        location: format!("byte {}", e.valid_up_to()),
        message: "input is not UTF-8".into(),
    })?;
    let format = match format {
        GraphFormat::Auto if text.trim_start().starts_with('{') => GraphFormat::Json,
        GraphFormat::Auto => GraphFormat::EdgeList,
        f => f,
    };
    match format {
        GraphFormat::Json => {
            let doc: GraphDoc = serde_json::from_str(text).map_err(json_error)?;
            let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
            Graph::new(doc.n, &edges)
        }
        _ => parse_edge_list(text),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: String| Error::Parse {
        location: format!("line {line}"),
        message,
    };
    let numbers = |line: usize, l: &str| -> Result<(usize, usize)> {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = parts[..] else {
            return Err(err(line, format!("expected two integers, found `{l}`")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(line, format!("`{s}` is not a nonnegative integer")))
        };
        Ok((parse(a)?, parse(b)?))
    };
    let (line, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header".into()))?;
    let (n, m) = numbers(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = numbers(line, l)?;
        if let Some(bad) = [u, v].into_iter().find(|&x| x >= n) {
            return Err(err(line, format!("vertex {bad} out of range for {n} vertices")));
        }
        if u == v {
            return Err(err(line, format!("self-loop on vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(
            text.lines().count().max(1),
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

pub fn parse_witness(bytes: &[u8]) -> Result<WitnessFamily> {
    serde_json::from_slice(bytes).map_err(json_error)
}

/// Serializes `intervals[v]` as `"v": value`, keys in numeric order.
struct ById<'a, T>(&'a [T]);

impl<T: Serialize> Serialize for ById<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (v, item) in self.0.iter().enumerate() {
            map.serialize_entry(&v.to_string(), item)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct RealizationOut<'a> {
    intervals: ById<'a, Interval>,
}

#[derive(Serialize)]
struct BoxesOut<'a> {
    k: usize,
    boxes: ById<'a, Vec<Interval>>,
}

#[derive(Deserialize)]
struct RealizationIn {
    intervals: BTreeMap<String, Interval>,
}

#[derive(Deserialize)]
struct BoxesIn {
    k: usize,
    boxes: BTreeMap<String, Vec<Interval>>,
}

fn dense<T>(map: BTreeMap<String, T>) -> Result<Vec<T>> {
    let mut keyed: Vec<(usize, T)> = map
        .into_iter()
        .map(|(k, v)| {
            k.parse::<usize>().map(|k| (k, v)).map_err(|_| Error::Parse {
                location: format!("key `{k}`"),
                message: "vertex keys must be integers".into(),
            })
        })
        .collect::<Result<_>>()?;
    keyed.sort_by_key(|(k, _)| *k);
    if keyed.iter().enumerate().any(|(i, (k, _))| i != *k) {
        return Err(Error::Parse {
            location: "vertex keys".into(),
            message: "keys must be exactly 0..n".into(),
        });
    }
    Ok(keyed.into_iter().map(|(_, v)| v).collect())
}

pub fn parse_realization(bytes: &[u8]) -> Result<IntervalRealization> {
    let doc: RealizationIn = serde_json::from_slice(bytes).map_err(json_error)?;
    Ok(IntervalRealization {
        intervals: dense(doc.intervals)?,
    })
}

pub fn parse_boxes(bytes: &[u8]) -> Result<BoxRepresentation> {
    let doc: BoxesIn = serde_json::from_slice(bytes).map_err(json_error)?;
    Ok(BoxRepresentation {
        k: doc.k,
        boxes: dense(doc.boxes)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    EdgeList,
    Dot,
    Svg,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "edgelist" | "txt" => Ok(Self::EdgeList),
            "dot" => Ok(Self::Dot),
            "svg" => Ok(Self::Svg),
            other => Err(Error::Unsupported(format!("output format `{other}`"))),
        }
    }
}

/// Anything the emitter can write.
#[derive(Debug, Clone, Copy)]
pub enum Artifact<'a> {
    Graph(&'a Graph),
    Witness(&'a WitnessFamily),
    Realization(&'a IntervalRealization),
    Boxes(&'a BoxRepresentation),
    Report(&'a serde_json::Value),
}

impl Artifact<'_> {
    fn kind(&self) -> &'static str {
        match self {
            Artifact::Graph(_) => "graph",
            Artifact::Witness(_) => "witness",
            Artifact::Realization(_) => "realization",
            Artifact::Boxes(_) => "boxes",
            Artifact::Report(_) => "report",
        }
    }
}

fn pretty<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory JSON serialization");
    s.push('\n');
    s
}

pub fn emit(artifact: Artifact<'_>, format: Format) -> Result<String> {
    match (artifact, format) {
        (Artifact::Graph(g), Format::Json) => Ok(graph_json(g)),
        (Artifact::Graph(g), Format::EdgeList) => Ok(graph_edge_list(g)),
        (Artifact::Graph(g), Format::Dot) => Ok(graph_dot(g)),
        (Artifact::Witness(w), Format::Json) => Ok(pretty(w)),
        (Artifact::Realization(r), Format::Json) => Ok(pretty(&RealizationOut {
            intervals: ById(&r.intervals),
        })),
        (Artifact::Boxes(b), Format::Json) => Ok(pretty(&BoxesOut {
            k: b.k,
            boxes: ById(&b.boxes),
        })),
        (Artifact::Boxes(b), Format::Svg) => boxes_svg(b),
        (Artifact::Report(v), Format::Json) => Ok(pretty(v)),
        (a, f) => Err(Error::Unsupported(format!("{f:?} output for {}", a.kind()))),
    }
}

/// Compact single-line JSON graph document.
pub fn graph_json(g: &Graph) -> String {
    let doc = GraphDoc {
        n: g.n(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("in-memory JSON serialization");
    s.push('\n');
    s
}

pub fn graph_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.num_edges());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn graph_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

const UNIT: i64 = 40;
const MARGIN: i64 = 20;

fn boxes_svg(b: &BoxRepresentation) -> Result<String> {
    if !matches!(b.k, 1 | 2) {
        return Err(Error::Unsupported(format!("SVG needs k in {{1, 2}}, got k = {}", b.k)));
    }
    let lo = |d: usize| b.boxes.iter().map(|bx| bx[d].lo).min().unwrap_or(0);
    let hi = |d: usize| b.boxes.iter().map(|bx| bx[d].hi).max().unwrap_or(0);
    let x0 = lo(0);
    let width = (hi(0) - x0 + 1) * UNIT + 2 * MARGIN;
    let mut body = String::new();
    let height;
    if b.k == 1 {
        // one row per vertex
        height = b.boxes.len() as i64 * UNIT + 2 * MARGIN;
        for (v, bx) in b.boxes.iter().enumerate() {
            let x1 = MARGIN + (bx[0].lo - x0) * UNIT + UNIT / 2;
            let x2 = MARGIN + (bx[0].hi - x0) * UNIT + UNIT / 2;
            let y = MARGIN + v as i64 * UNIT + UNIT / 2;
            let _ = writeln!(
                body,
                "  <line x1=\"{x1}\" y1=\"{y}\" x2=\"{x2}\" y2=\"{y}\" stroke=\"black\" stroke-width=\"4\" stroke-linecap=\"round\"/>"
            );
            let _ = writeln!(
                body,
                "  <text x=\"{}\" y=\"{}\" font-size=\"12\">{v}</text>",
                x1 - 12,
                y + 4
            );
        }
    } else {
        let y0 = lo(1);
        let y_top = hi(1);
        height = (y_top - y0 + 1) * UNIT + 2 * MARGIN;
        for (v, bx) in b.boxes.iter().enumerate() {
            let x = MARGIN + (bx[0].lo - x0) * UNIT + 4;
            let w = (bx[0].hi - bx[0].lo) * UNIT + UNIT - 8;
            // SVG y grows downward
            let y = MARGIN + (y_top - bx[1].hi) * UNIT + 4;
            let h = (bx[1].hi - bx[1].lo) * UNIT + UNIT - 8;
            let _ = writeln!(
                body,
                "  <rect x=\"{x}\" y=\"{y}\" width=\"{w}\" height=\"{h}\" fill=\"none\" stroke=\"black\"/>"
            );
            let _ = writeln!(
                body,
                "  <text x=\"{}\" y=\"{}\" font-size=\"12\">{v}</text>",
                x + 3,
                y + 13
            );
        }
    }
    Ok(format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n{body}</svg>\n"
    ))
}
