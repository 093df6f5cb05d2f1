//! Directed capacitated networks with integer edge lengths.

mod dimacs;
mod fixtures;
mod generate;
mod paths;

pub use dimacs::{parse_network, serialize_network};
pub use fixtures::{
    counterexample_fixture, diamond_with_direct, single_edge, COUNTEREXAMPLE_BOUND,
};
pub use generate::{generate_random, GeneratorConfig};
pub use paths::{enumerate_l_bounded_paths, DEFAULT_PATH_BUDGET};

use crate::error::{Error, Result};

/// How the length of a path is measured against the bound `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LengthMode {
    /// Every edge counts one.
    Hop,
    /// Every edge counts its `length` field.
    General,
}

impl LengthMode {
    pub fn as_str(self) -> &'static str {
        match self {
            LengthMode::Hop => "hop",
            LengthMode::General => "general",
        }
    }
}

impl std::str::FromStr for LengthMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hop" => Ok(LengthMode::Hop),
            "general" => Ok(LengthMode::General),
            other => Err(Error::InvalidArgument(format!(
                "unknown length mode {other:?} (expected hop or general)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub id: usize,
    pub tail: usize,
    pub head: usize,
    pub capacity: f64,
    pub length: u64,
}

impl Edge {
    pub fn mode_length(&self, mode: LengthMode) -> u64 {
        match mode {
            LengthMode::Hop => 1,
            LengthMode::General => self.length,
        }
    }
}

/// A validated network. Vertices are `0..vertex_count`, edge ids are dense
/// `0..edge_count` in insertion order.
#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    vertex_count: usize,
    edges: Vec<Edge>,
    source: usize,
    sink: usize,
    out_edges: Vec<Vec<usize>>,
}

impl Network {
    /// Builds a network from `(tail, head, capacity, length)` tuples.
    pub fn new(
        vertex_count: usize,
        source: usize,
        sink: usize,
        arcs: impl IntoIterator<Item = (usize, usize, f64, u64)>,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidNetwork(
                "network needs at least one vertex".into(),
            ));
        }
        if source >= vertex_count || sink >= vertex_count {
            return Err(Error::InvalidNetwork(format!(
                "source {source} or sink {sink} out of range for {vertex_count} vertices"
            )));
        }
        if source == sink {
            return Err(Error::InvalidNetwork("source and sink coincide".into()));
        }
        let mut edges = Vec::new();
        let mut out_edges = vec![Vec::new(); vertex_count];
        for (id, (tail, head, capacity, length)) in arcs.into_iter().enumerate() {
            check_arc(vertex_count, tail, head, capacity, length)
                .map_err(|msg| Error::InvalidNetwork(format!("edge {id}: {msg}")))?;
            out_edges[tail].push(id);
            edges.push(Edge {
                id,
                tail,
                head,
                capacity,
                length,
            });
        }
        Ok(Self {
            vertex_count,
            edges,
            source,
            sink,
            out_edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Option<&Edge> {
        self.edges.get(id)
    }

    /// Outgoing edge ids of `v`, in increasing id order.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    /// Copy of this network with every length set to one.
    pub fn with_unit_lengths(&self) -> Network {
        let mut net = self.clone();
        for e in &mut net.edges {
            e.length = 1;
        }
        net
    }

    /// Copy with capacities replaced by `f(edge)`.
    pub fn map_capacities(&self, mut f: impl FnMut(&Edge) -> f64) -> Result<Network> {
        Network::new(
            self.vertex_count,
            self.source,
            self.sink,
            self.edges.iter().map(|e| (e.tail, e.head, f(e), e.length)),
        )
    }

    /// Mode-length of an edge sequence; fails on unknown edge ids.
    pub fn path_length(&self, path: &Path, mode: LengthMode) -> Result<u64> {
        path.edges()
            .iter()
            .map(|&id| {
                self.edge(id)
                    .map(|e| e.mode_length(mode))
                    .ok_or(Error::DanglingEdge(id))
            })
            .sum()
    }

    /// Smallest capacity along the path.
    pub fn bottleneck(&self, path: &Path) -> Result<f64> {
        path.edges()
            .iter()
            .map(|&id| {
                self.edge(id)
                    .map(|e| e.capacity)
                    .ok_or(Error::DanglingEdge(id))
            })
            .try_fold(f64::INFINITY, |acc, c| c.map(|c| acc.min(c)))
    }

    /// Checks that `path` is a simple, contiguous s-t path in this network.
    pub fn check_path(&self, path: &Path) -> Result<()> {
        let ids = path.edges();
        if ids.is_empty() {
            return Err(Error::InvalidPath("empty edge sequence".into()));
        }
        let mut seen = vec![false; self.vertex_count];
        let mut at = self.source;
        seen[at] = true;
        for &id in ids {
            let e = self.edge(id).ok_or(Error::DanglingEdge(id))?;
            if e.tail != at {
                return Err(Error::InvalidPath(format!(
                    "edge {id} leaves vertex {} but the walk is at {at}",
                    e.tail
                )));
            }
            if seen[e.head] {
                return Err(Error::InvalidPath(format!("vertex {} repeated", e.head)));
            }
            seen[e.head] = true;
            at = e.head;
        }
        if at != self.sink {
            return Err(Error::InvalidPath(format!(
                "path ends at {at}, not the sink"
            )));
        }
        Ok(())
    }
}

fn check_arc(
    n: usize,
    tail: usize,
    head: usize,
    capacity: f64,
    length: u64,
) -> std::result::Result<(), String> {
    if tail >= n || head >= n {
        return Err(format!("endpoint out of range ({tail} -> {head}, n = {n})"));
    }
    if tail == head {
        return Err(format!("self-loop at vertex {tail}"));
    }
    if !(capacity.is_finite() && capacity > 0.0) {
        return Err(format!(
            "capacity must be positive and finite, got {capacity}"
        ));
    }
    if length < 1 {
        return Err("length must be at least 1".into());
    }
    Ok(())
}

/// An s-t path identified by its edge-id sequence. Ordering is
/// lexicographic on the ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(edges: Vec<usize>) -> Self {
        Path(edges)
    }

    pub fn edges(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_edges(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for Path {
    fn from(edges: Vec<usize>) -> Self {
        Path(edges)
    }
}

/// Removes cycles from an s-rooted walk, keeping the first visit of each
/// vertex. The result is a simple path with the same endpoints.
pub(crate) fn shortcut_walk(net: &Network, walk: &[usize]) -> Vec<usize> {
    let mut position = vec![usize::MAX; net.vertex_count()];
    let mut out: Vec<usize> = Vec::with_capacity(walk.len());
    position[net.source()] = 0;
    for &id in walk {
        let e = &net.edges()[id];
        if position[e.head] != usize::MAX {
            let keep = position[e.head];
            for removed in out.drain(keep..) {
                position[net.edges()[removed].head] = usize::MAX;
            }
        } else {
            out.push(id);
            position[e.head] = out.len();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loops_and_bad_values() {
        assert!(Network::new(2, 0, 1, [(0, 0, 1.0, 1)]).is_err());
        assert!(Network::new(2, 0, 1, [(0, 1, 0.0, 1)]).is_err());
        assert!(Network::new(2, 0, 1, [(0, 1, 1.0, 0)]).is_err());
        assert!(Network::new(2, 0, 0, [(0, 1, 1.0, 1)]).is_err());
        assert!(Network::new(2, 0, 1, [(0, 1, f64::NAN, 1)]).is_err());
    }

    #[test]
    fn parallel_edges_are_distinct() {
        let net = Network::new(2, 0, 1, [(0, 1, 1.0, 1), (0, 1, 2.0, 1)]).unwrap();
        assert_eq!(net.out_edges(0), &[0, 1]);
        assert!(net.check_path(&Path::new(vec![1])).is_ok());
    }

    #[test]
    fn path_checks() {
        let net = diamond_with_direct();
        assert!(net.check_path(&Path::new(vec![0, 1])).is_ok());
        assert!(net.check_path(&Path::new(vec![1])).is_err());
        assert!(net.check_path(&Path::new(vec![])).is_err());
        assert_eq!(
            net.check_path(&Path::new(vec![99])),
            Err(Error::DanglingEdge(99))
        );
    }

    #[test]
    fn shortcut_removes_loops() {
        // 0 -> 1 -> 2 -> 1 -> 3
        let net = Network::new(
            4,
            0,
            3,
            [
                (0, 1, 1.0, 1),
                (1, 2, 1.0, 1),
                (2, 1, 1.0, 1),
                (1, 3, 1.0, 1),
            ],
        )
        .unwrap();
        assert_eq!(shortcut_walk(&net, &[0, 1, 2, 3]), vec![0, 3]);
        assert_eq!(shortcut_walk(&net, &[0, 3]), vec![0, 3]);
    }
}
