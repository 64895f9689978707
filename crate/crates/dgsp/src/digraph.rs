//! Directed-graph data model, validation, and edge-list / signal file parsing.

use std::path::Path;

use crate::error::{DgspError, Result};
use crate::rng;
use crate::scalar::Real;

/// A weighted directed graph with a dense nonnegative weight matrix.
///
/// Immutable after construction; `w[i][j]` holds the weight of edge i→j and is
/// zero where no edge exists. Self-loops and duplicate edges are rejected.
#[derive(Clone, Debug)]
pub struct DiGraph<T> {
    n: usize,
    edges: Vec<(usize, usize, T)>,
    w: Vec<T>,
    labels: Option<Vec<String>>,
}

impl<T: Real> DiGraph<T> {
    /// Build and validate a graph from an explicit edge list.
    pub fn new(n: usize, edges: Vec<(usize, usize, T)>) -> Result<Self> {
        if n == 0 {
            return Err(DgspError::InvalidGraph("vertex count must be positive".into()));
        }
        let mut w = vec![T::zero(); n * n];
        for &(src, dst, weight) in &edges {
            if src >= n || dst >= n {
                return Err(DgspError::InvalidGraph(format!(
                    "edge {src}->{dst} out of range for n={n}"
                )));
            }
            if src == dst {
                return Err(DgspError::InvalidGraph(format!("self-loop at vertex {src}")));
            }
            if !(weight >= T::zero()) {
                return Err(DgspError::InvalidGraph(format!(
                    "edge {src}->{dst} has negative or non-finite weight"
                )));
            }
            if w[src * n + dst] != T::zero() {
                return Err(DgspError::InvalidGraph(format!("duplicate edge {src}->{dst}")));
            }
            // Zero-weight duplicates are indistinguishable in W; forbid zero
            // weights entirely so every nonzero entry maps to one edge record.
            if weight == T::zero() {
                return Err(DgspError::InvalidGraph(format!(
                    "edge {src}->{dst} has zero weight; omit it instead"
                )));
            }
            w[src * n + dst] = weight;
        }
        Ok(Self { n, edges, w, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(DgspError::InvalidGraph(format!(
                "label count {} does not match n={}",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, T)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Weight of edge i→j, zero if absent.
    pub fn weight(&self, i: usize, j: usize) -> T {
        self.w[i * self.n + j]
    }

    /// Sum of weights on outgoing edges of vertex i (row sum of W).
    pub fn out_degree(&self, i: usize) -> T {
        (0..self.n).map(|j| self.weight(i, j)).fold(T::zero(), |a, b| a + b)
    }

    /// Sum of weights on incoming edges of vertex i (column sum of W).
    pub fn in_degree(&self, i: usize) -> T {
        (0..self.n).map(|j| self.weight(j, i)).fold(T::zero(), |a, b| a + b)
    }

    /// True iff the weight matrix equals its transpose entrywise.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.weight(i, j) != self.weight(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Parse the edge-list text format: first non-comment line is the vertex
    /// count, then `src dst weight` rows. `#` starts a comment line.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = idx + 1;
            if n.is_none() {
                n = Some(line.parse().map_err(|_| DgspError::Parse {
                    line: lineno,
                    msg: format!("expected vertex count, got {line:?}"),
                })?);
                continue;
            }
            let mut parts = line.split_whitespace();
            let (src, dst, weight) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
                (Some(s), Some(d), Some(w), None) => (s, d, w),
                _ => {
                    return Err(DgspError::Parse {
                        line: lineno,
                        msg: format!("expected 'src dst weight', got {line:?}"),
                    })
                }
            };
            let src: usize = src.parse().map_err(|_| DgspError::Parse {
                line: lineno,
                msg: format!("bad source index {src:?}"),
            })?;
            let dst: usize = dst.parse().map_err(|_| DgspError::Parse {
                line: lineno,
                msg: format!("bad destination index {dst:?}"),
            })?;
            let weight: f64 = weight.parse().map_err(|_| DgspError::Parse {
                line: lineno,
                msg: format!("bad weight {weight:?}"),
            })?;
            edges.push((src, dst, T::of(weight)));
        }
        let n = n.ok_or(DgspError::Parse { line: 0, msg: "empty edge-list file".into() })?;
        Self::new(n, edges)
    }

    pub fn load_edge_list(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse_edge_list(&std::fs::read_to_string(path)?)
    }

    /// Serialize back to the edge-list text format (round-trips with
    /// `parse_edge_list` to an identical weight matrix).
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.n));
        for &(src, dst, weight) in &self.edges {
            out.push_str(&format!("{src} {dst} {weight}\n"));
        }
        out
    }

    /// Erdős–Rényi-style random digraph: each ordered pair (i,j), i≠j, gets a
    /// unit-weight edge with probability `p`, deterministically per seed.
    pub fn random(n: usize, p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(DgspError::InvalidParameter(format!("p={p} not in [0,1]")));
        }
        let mut edges = Vec::new();
        let mut counter = 0u64;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                // p=1 must be certain even though uniform01 excludes 0.
                if p >= 1.0 || rng::uniform01(seed, counter) < p {
                    edges.push((i, j, T::one()));
                }
                counter += 1;
            }
        }
        Self::new(n, edges)
    }
}

/// A per-vertex sample vector paired with an optional unit string.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphSignal<T> {
    pub values: Vec<T>,
    pub unit: Option<String>,
}

impl<T: Real> GraphSignal<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(DgspError::InvalidSignal("non-finite sample".into()));
        }
        Ok(Self { values, unit: None })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Parse a one-value-per-line signal file; `#` starts a comment line.
    /// The row count must equal `n`.
    pub fn parse_signal(text: &str, n: usize) -> Result<Self> {
        let mut values = Vec::with_capacity(n);
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let v: f64 = line.parse().map_err(|_| DgspError::Parse {
                line: idx + 1,
                msg: format!("bad sample {line:?}"),
            })?;
            values.push(T::of(v));
        }
        if values.len() != n {
            return Err(DgspError::InvalidSignal(format!(
                "expected {n} samples, found {}",
                values.len()
            )));
        }
        Self::new(values)
    }

    pub fn load_signal(path: impl AsRef<Path>, n: usize) -> Result<Self> {
        Self::parse_signal(&std::fs::read_to_string(path)?, n)
    }
}
