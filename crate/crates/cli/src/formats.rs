//! File formats and JSON report shapes.
//!
//! Graphs travel as edge-list text (`n m` header, one `u v` line per edge)
//! or as a small JSON object; weightings as `u v w` lines; realization
//! targets as JSON keyed by vertex. All reports serialize with a fixed key
//! order so repeated runs diff cleanly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use vcw_core::{
    BruteForceOutcome, Error, Graph, GroupRealization, GroupSpec, IntWeighting, SolveReport,
    TargetColoring, VerifyOutcome,
};

#[derive(Debug, Serialize, Deserialize)]
pub struct WeightEntry {
    pub u: usize,
    pub v: usize,
    pub w: u32,
}

#[derive(Debug, Serialize)]
pub struct SolveReportDto {
    pub status: String,
    pub strategy: Option<String>,
    pub weights: Option<Vec<WeightEntry>>,
    pub colors: Option<BTreeMap<String, u64>>,
    pub notes: BTreeMap<String, String>,
}

#[derive(Debug, Serialize)]
pub struct VerifyDto {
    pub ok: bool,
    pub colors: BTreeMap<String, u64>,
    pub conflicts: Vec<WeightPair>,
}

#[derive(Debug, Serialize)]
pub struct WeightPair {
    pub u: usize,
    pub v: usize,
}

#[derive(Debug, Serialize)]
pub struct OracleDto {
    pub exists: bool,
    pub enumerated: u64,
    pub weights: Option<Vec<WeightEntry>>,
}

#[derive(Debug, Serialize)]
pub struct GroupWeightEntry {
    pub u: usize,
    pub v: usize,
    pub w: Vec<u64>,
}

#[derive(Debug, Serialize)]
pub struct RealizeDto {
    pub status: String,
    pub group: String,
    pub weights: Vec<GroupWeightEntry>,
    pub colors: BTreeMap<String, Vec<u64>>,
    pub rounds: usize,
}

/// JSON graph form, accepted anywhere an edge-list file is.
#[derive(Debug, Serialize, Deserialize)]
pub struct GraphDto {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Deserialize)]
struct TargetsFile {
    group: String,
    targets: BTreeMap<String, Vec<u64>>,
}

fn weight_entries(g: &Graph, w: &IntWeighting) -> Vec<WeightEntry> {
    g.edges()
        .iter()
        .zip(w.weights())
        .map(|(&(u, v), &w)| WeightEntry { u, v, w })
        .collect()
}

fn color_map(colors: &[u64]) -> BTreeMap<String, u64> {
    colors
        .iter()
        .enumerate()
        .map(|(v, &c)| (v.to_string(), c))
        .collect()
}

pub fn solve_report_dto(g: &Graph, report: &SolveReport) -> SolveReportDto {
    SolveReportDto {
        status: report.status.to_string(),
        strategy: report.strategy.map(|k| k.to_string()),
        weights: report.weighting.as_ref().map(|w| weight_entries(g, w)),
        colors: report.colors.as_deref().map(color_map),
        notes: report.notes.iter().cloned().collect(),
    }
}

pub fn verify_dto(outcome: &VerifyOutcome) -> VerifyDto {
    VerifyDto {
        ok: outcome.ok,
        colors: color_map(&outcome.colors),
        conflicts: outcome
            .conflicts
            .iter()
            .map(|&(u, v)| WeightPair { u, v })
            .collect(),
    }
}

pub fn oracle_dto(g: &Graph, outcome: &BruteForceOutcome) -> OracleDto {
    OracleDto {
        exists: outcome.witness.is_some(),
        enumerated: outcome.enumerated,
        weights: outcome.witness.as_ref().map(|w| weight_entries(g, w)),
    }
}

pub fn realize_dto(g: &Graph, group: &str, real: &GroupRealization) -> RealizeDto {
    let colors = real.weighting.induced_colors(g);
    RealizeDto {
        status: "Realized".into(),
        group: group.into(),
        weights: g
            .edges()
            .iter()
            .zip(real.weighting.weights())
            .map(|(&(u, v), w)| GroupWeightEntry {
                u,
                v,
                w: w.coords().to_vec(),
            })
            .collect(),
        colors: colors
            .iter()
            .enumerate()
            .map(|(v, c)| (v.to_string(), c.coords().to_vec()))
            .collect(),
        rounds: real.rounds.len(),
    }
}

/// Reads a graph from edge-list text, or from the JSON form when the first
/// meaningful byte is `{`.
pub fn parse_graph(text: &str) -> Result<Graph, String> {
    if text.trim_start().starts_with('{') {
        let dto: GraphDto =
            serde_json::from_str(text).map_err(|e| format!("bad graph JSON: {e}"))?;
        Graph::new(dto.n, &dto.edges).map_err(|e| e.to_string())
    } else {
        Graph::from_edge_list(text).map_err(|e| e.to_string())
    }
}

/// Parses `u v w` weight lines into an edge-indexed weighting. Every edge
/// of the graph must appear exactly once and weights must be positive.
pub fn parse_weights(g: &Graph, text: &str) -> Result<IntWeighting, String> {
    let mut slots: Vec<Option<u32>> = vec![None; g.edge_count()];
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(format!(
                "line {lineno}: expected `u v w`, found {} tokens",
                toks.len()
            ));
        }
        let parse = |t: &str| -> Result<u64, String> {
            t.parse::<u64>()
                .map_err(|_| format!("line {lineno}: bad integer {t:?}"))
        };
        let (u, v) = (parse(toks[0])? as usize, parse(toks[1])? as usize);
        let w = parse(toks[2])?;
        if w == 0 || w > u32::MAX as u64 {
            return Err(format!("line {lineno}: weight {w} out of range"));
        }
        let e = g
            .edge_index(u, v)
            .ok_or_else(|| format!("line {lineno}: edge {u}-{v} not in graph"))?;
        if slots[e].is_some() {
            return Err(format!("line {lineno}: edge {u}-{v} weighted twice"));
        }
        slots[e] = Some(w as u32);
    }
    let missing = slots.iter().filter(|s| s.is_none()).count();
    if missing > 0 {
        return Err(format!("{missing} of {} edges unweighted", g.edge_count()));
    }
    Ok(IntWeighting::new(slots.into_iter().flatten().collect()))
}

/// Targets file: `{"group": "Z2", "targets": {"0": [1], "1": [0], ...}}`.
/// Every vertex of the graph must get a target.
pub fn parse_targets(g: &Graph, text: &str) -> Result<(GroupSpec, TargetColoring), String> {
    let file: TargetsFile =
        serde_json::from_str(text).map_err(|e| format!("bad targets JSON: {e}"))?;
    let spec: GroupSpec = file.group.parse().map_err(|e: Error| e.to_string())?;
    let mut values = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let coords = file
            .targets
            .get(&v.to_string())
            .ok_or_else(|| format!("vertex {v} has no target"))?;
        values.push(spec.element(coords).map_err(|e| e.to_string())?);
    }
    if file.targets.len() != g.vertex_count() {
        return Err(format!(
            "targets name {} vertices, graph has {}",
            file.targets.len(),
            g.vertex_count()
        ));
    }
    let targets = TargetColoring::new(spec.clone(), values).map_err(|e| e.to_string())?;
    Ok((spec, targets))
}

pub fn graph_json(g: &Graph) -> String {
    let dto = GraphDto {
        n: g.vertex_count(),
        edges: g.edges().to_vec(),
    };
    let mut s = serde_json::to_string(&dto).expect("graph serializes");
    s.push('\n');
    s
}
