//! Edge weightings, induced vertex colors, and the verifier that every
//! solver output is checked against.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{GroupElement, GroupSpec};

/// Integer edge weights, indexed like [`Graph::edges`]. The color of a
/// vertex is the sum of the weights on its incident edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntWeighting {
    weights: Vec<u32>,
}

impl IntWeighting {
    pub fn new(weights: Vec<u32>) -> Self {
        IntWeighting { weights }
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn induced_colors(&self, g: &Graph) -> Vec<u64> {
        let mut colors = vec![0u64; g.vertex_count()];
        for (&(u, v), &w) in g.edges().iter().zip(&self.weights) {
            colors[u] += w as u64;
            colors[v] += w as u64;
        }
        colors
    }
}

/// Group-valued edge weights, indexed like [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupWeighting {
    spec: GroupSpec,
    weights: Vec<GroupElement>,
}

impl GroupWeighting {
    pub fn new(spec: GroupSpec, weights: Vec<GroupElement>) -> Self {
        GroupWeighting { spec, weights }
    }

    pub fn zero(spec: &GroupSpec, edge_count: usize) -> Self {
        GroupWeighting {
            spec: spec.clone(),
            weights: vec![spec.zero(); edge_count],
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn weights(&self) -> &[GroupElement] {
        &self.weights
    }

    pub fn weight_mut(&mut self, idx: usize) -> &mut GroupElement {
        &mut self.weights[idx]
    }

    pub fn induced_colors(&self, g: &Graph) -> Vec<GroupElement> {
        let mut colors = vec![self.spec.zero(); g.vertex_count()];
        for (&(u, v), w) in g.edges().iter().zip(&self.weights) {
            colors[u] = self.spec.add(&colors[u], w);
            colors[v] = self.spec.add(&colors[v], w);
        }
        colors
    }
}

/// A requested vertex coloring over a group: the realizers drive induced
/// colors to match it exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetColoring {
    spec: GroupSpec,
    values: Vec<GroupElement>,
}

impl TargetColoring {
    pub fn new(spec: GroupSpec, values: Vec<GroupElement>) -> Result<Self> {
        for v in &values {
            if v.coords().len() != spec.arity() {
                return Err(Error::ElementShapeMismatch {
                    expected: spec.arity(),
                    got: v.coords().len(),
                });
            }
        }
        Ok(TargetColoring { spec, values })
    }

    /// Z2 targets from a bit per vertex.
    pub fn parity(bits: &[bool]) -> Self {
        let spec = GroupSpec::new(&[2]).unwrap();
        let values = bits
            .iter()
            .map(|&b| spec.element(&[b as u64]).unwrap())
            .collect();
        TargetColoring { spec, values }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, v: usize) -> &GroupElement {
        &self.values[v]
    }

    pub fn values(&self) -> &[GroupElement] {
        &self.values
    }

    pub fn sum(&self) -> GroupElement {
        self.values
            .iter()
            .fold(self.spec.zero(), |acc, v| self.spec.add(&acc, v))
    }
}

/// Converts a Z2 weighting into weights from {1, 2}: residue 1 becomes
/// weight 1, residue 0 becomes weight 2, preserving all color parities.
pub fn lift_to_12(w: &GroupWeighting) -> Result<IntWeighting> {
    if !w.spec().is_binary() {
        return Err(Error::NotBinaryGroup);
    }
    Ok(IntWeighting::new(
        w.weights()
            .iter()
            .map(|e| if e.coords()[0] == 1 { 1 } else { 2 })
            .collect(),
    ))
}

/// Result of checking a weighting: induced colors plus the edges whose
/// endpoints collide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub ok: bool,
    pub colors: Vec<u64>,
    pub conflicts: Vec<(usize, usize)>,
}

/// Checks that adjacent vertices get distinct induced colors. Conflicting
/// edges come back in canonical order.
pub fn verify_weighting(g: &Graph, w: &IntWeighting) -> Result<VerifyOutcome> {
    if w.len() != g.edge_count() {
        return Err(Error::IncompleteWeighting {
            expected: g.edge_count(),
            got: w.len(),
        });
    }
    let colors = w.induced_colors(g);
    let conflicts: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| colors[u] == colors[v])
        .collect();
    Ok(VerifyOutcome {
        ok: conflicts.is_empty(),
        colors,
        conflicts,
    })
}
