//! Linear 3-uniform hypergraphs (partial triple systems).
//!
//! A [`LinearTripleSystem`] keeps its edges in insertion order and maintains a
//! pair index mapping every covered vertex pair to the unique edge that
//! contains it. Every mutating path goes through [`LinearTripleSystem::add_edge`],
//! so an instance that exists is always linear.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = u32;
pub type EdgeId = usize;

/// Systems with fewer vertices than this use a dense triangular pair table.
pub const DENSE_INDEX_THRESHOLD: usize = 4096;

const NO_EDGE: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SystemError {
    #[error("vertex {vertex} out of range for a system on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("degenerate triple {0:?}: repeated vertex")]
    DegenerateTriple([Vertex; 3]),
    #[error("linearity violation: pair {{{}, {}}} lies in edges {} and {}", pair.0, pair.1, edges.0, edges.1)]
    LinearityViolation {
        pair: (Vertex, Vertex),
        edges: (EdgeId, EdgeId),
    },
    #[error("duplicate edge {edge}: already present as edge {existing}")]
    DuplicateEdge { edge: Triple, existing: EdgeId },
    #[error("edge {edge} is not stored in strictly increasing vertex order")]
    UnorderedTriple { edge: EdgeId },
    #[error("pair index inconsistent: {0}")]
    IndexInconsistent(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("system has {n} vertices, above the supported limit of {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },
}

/// A 3-element vertex set, stored in strictly increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[Vertex; 3]", into = "[Vertex; 3]")]
pub struct Triple([Vertex; 3]);

impl Triple {
    /// Builds a triple from three distinct vertices given in any order.
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Result<Self, SystemError> {
        let mut v = [a, b, c];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            return Err(SystemError::DegenerateTriple([a, b, c]));
        }
        Ok(Triple(v))
    }

    pub fn vertices(&self) -> [Vertex; 3] {
        self.0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn pairs(&self) -> [(Vertex, Vertex); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }

    /// The two vertices of the triple other than `v`, or `None` if `v` is not in it.
    pub fn others(&self, v: Vertex) -> Option<(Vertex, Vertex)> {
        let [a, b, c] = self.0;
        if v == a {
            Some((b, c))
        } else if v == b {
            Some((a, c))
        } else if v == c {
            Some((a, b))
        } else {
            None
        }
    }

    /// The vertex completing `{u, v}` to this triple.
    pub fn third(&self, u: Vertex, v: Vertex) -> Option<Vertex> {
        if u == v || !self.contains(u) || !self.contains(v) {
            return None;
        }
        self.0.iter().copied().find(|&w| w != u && w != v)
    }

    pub fn intersection(&self, other: &Triple) -> Vec<Vertex> {
        self.0
            .iter()
            .copied()
            .filter(|&v| other.contains(v))
            .collect()
    }

    pub fn is_disjoint(&self, other: &Triple) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }
}

impl TryFrom<[Vertex; 3]> for Triple {
    type Error = SystemError;

    fn try_from(v: [Vertex; 3]) -> Result<Self, Self::Error> {
        Triple::new(v[0], v[1], v[2])
    }
}

impl From<Triple> for [Vertex; 3] {
    fn from(t: Triple) -> Self {
        t.0
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

fn ordered(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug)]
enum PairTable {
    Dense(Vec<u32>),
    Sparse(HashMap<(Vertex, Vertex), u32>),
}

impl PairTable {
    fn new(n: usize) -> Self {
        if n < DENSE_INDEX_THRESHOLD {
            PairTable::Dense(vec![NO_EDGE; n * n.saturating_sub(1) / 2])
        } else {
            PairTable::Sparse(HashMap::new())
        }
    }

    fn slot(u: Vertex, v: Vertex) -> usize {
        let (u, v) = (u as usize, v as usize);
        v * (v - 1) / 2 + u
    }

    fn get(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let (u, v) = ordered(u, v);
        match self {
            PairTable::Dense(t) => match t[Self::slot(u, v)] {
                NO_EDGE => None,
                e => Some(e as EdgeId),
            },
            PairTable::Sparse(m) => m.get(&(u, v)).map(|&e| e as EdgeId),
        }
    }

    fn set(&mut self, u: Vertex, v: Vertex, edge: EdgeId) {
        let (u, v) = ordered(u, v);
        match self {
            PairTable::Dense(t) => t[Self::slot(u, v)] = edge as u32,
            PairTable::Sparse(m) => {
                m.insert((u, v), edge as u32);
            }
        }
    }

    fn clear(&mut self, u: Vertex, v: Vertex) {
        let (u, v) = ordered(u, v);
        match self {
            PairTable::Dense(t) => t[Self::slot(u, v)] = NO_EDGE,
            PairTable::Sparse(m) => {
                m.remove(&(u, v));
            }
        }
    }
}

/// A 3-uniform hypergraph on vertices `0..n` in which every pair of vertices
/// lies in at most one edge.
#[derive(Clone, Debug)]
pub struct LinearTripleSystem {
    n: usize,
    edges: Vec<Triple>,
    pairs: PairTable,
    pair_entries: usize,
    incidence: Vec<Vec<EdgeId>>,
}

impl PartialEq for LinearTripleSystem {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for LinearTripleSystem {}

impl LinearTripleSystem {
    pub fn new(n: usize) -> Self {
        LinearTripleSystem {
            n,
            edges: Vec::new(),
            pairs: PairTable::new(n),
            pair_entries: 0,
            incidence: vec![Vec::new(); n],
        }
    }

    /// Builds a system by adding the given triples in order.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, SystemError>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let mut sys = LinearTripleSystem::new(n);
        for [a, b, c] in edges {
            sys.add_triple(a, b, c)?;
        }
        Ok(sys)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Triple {
        self.edges[id]
    }

    /// Edge ids through `v`, in insertion order.
    pub fn edges_at(&self, v: Vertex) -> &[EdgeId] {
        &self.incidence[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incidence[v as usize].len()
    }

    /// Number of entries in the pair index (always three per edge).
    pub fn pair_index_len(&self) -> usize {
        self.pair_entries
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), SystemError> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(SystemError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Checks whether `t` could be added without breaking linearity.
    pub fn check_addable(&self, t: Triple) -> Result<(), SystemError> {
        for v in t.vertices() {
            self.check_vertex(v)?;
        }
        let [a, b, c] = t.vertices();
        if let (Some(e1), Some(e2), Some(e3)) = (
            self.pairs.get(a, b),
            self.pairs.get(a, c),
            self.pairs.get(b, c),
        ) {
            if e1 == e2 && e2 == e3 {
                return Err(SystemError::DuplicateEdge {
                    edge: t,
                    existing: e1,
                });
            }
        }
        for (u, v) in t.pairs() {
            if let Some(existing) = self.pairs.get(u, v) {
                return Err(SystemError::LinearityViolation {
                    pair: (u, v),
                    edges: (existing, self.edges.len()),
                });
            }
        }
        Ok(())
    }

    /// Fast path for searches: true iff none of the three pairs is covered.
    /// Vertices must be in range.
    pub fn is_addable(&self, t: Triple) -> bool {
        t.pairs()
            .iter()
            .all(|&(u, v)| self.pairs.get(u, v).is_none())
    }

    pub fn add_edge(&mut self, t: Triple) -> Result<EdgeId, SystemError> {
        self.check_addable(t)?;
        let id = self.edges.len();
        for (u, v) in t.pairs() {
            self.pairs.set(u, v, id);
        }
        self.pair_entries += 3;
        for v in t.vertices() {
            self.incidence[v as usize].push(id);
        }
        self.edges.push(t);
        Ok(id)
    }

    pub fn add_triple(&mut self, a: Vertex, b: Vertex, c: Vertex) -> Result<EdgeId, SystemError> {
        for v in [a, b, c] {
            self.check_vertex(v)?;
        }
        self.add_edge(Triple::new(a, b, c)?)
    }

    /// Removes and returns the most recently added edge.
    pub fn pop_edge(&mut self) -> Option<Triple> {
        let t = self.edges.pop()?;
        for (u, v) in t.pairs() {
            self.pairs.clear(u, v);
        }
        self.pair_entries -= 3;
        for v in t.vertices() {
            let inc = &mut self.incidence[v as usize];
            debug_assert_eq!(inc.last(), Some(&self.edges.len()));
            inc.pop();
        }
        Some(t)
    }

    /// The unique edge covering `{u, v}`, if any.
    pub fn edge_containing_pair(
        &self,
        u: Vertex,
        v: Vertex,
    ) -> Result<Option<EdgeId>, SystemError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(SystemError::DegenerateTriple([u, v, v]));
        }
        Ok(self.pairs.get(u, v))
    }

    /// Unchecked variant of [`Self::edge_containing_pair`] for hot loops.
    #[inline]
    pub fn pair_edge(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.pairs.get(u, v)
    }

    /// Number of unordered vertex pairs not covered by any edge.
    pub fn uncovered_pairs(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.pair_entries
    }

    /// Re-checks every structural invariant: ordering, range, duplicates,
    /// linearity, and agreement of the pair index and incidence lists with the
    /// edge list.
    pub fn validate(&self) -> Result<(), SystemError> {
        let raw: Vec<[Vertex; 3]> = self.edges.iter().map(|t| t.vertices()).collect();
        validate_edges(self.n, &raw)?;
        if self.pair_entries != 3 * self.edges.len() {
            return Err(SystemError::IndexInconsistent(format!(
                "{} pair entries for {} edges",
                self.pair_entries,
                self.edges.len()
            )));
        }
        for (id, t) in self.edges.iter().enumerate() {
            for (u, v) in t.pairs() {
                if self.pairs.get(u, v) != Some(id) {
                    return Err(SystemError::IndexInconsistent(format!(
                        "pair {{{u}, {v}}} does not point at edge {id}"
                    )));
                }
            }
            for v in t.vertices() {
                if !self.incidence[v as usize].contains(&id) {
                    return Err(SystemError::IndexInconsistent(format!(
                        "vertex {v} is missing edge {id} in its incidence list"
                    )));
                }
            }
        }
        let incidences: usize = self.incidence.iter().map(Vec::len).sum();
        if incidences != 3 * self.edges.len() {
            return Err(SystemError::IndexInconsistent(format!(
                "{incidences} incidences for {} edges",
                self.edges.len()
            )));
        }
        Ok(())
    }

    /// Same edge set with edges listed in lexicographic order.
    pub fn sorted(&self) -> LinearTripleSystem {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        let mut out = LinearTripleSystem::new(self.n);
        for t in edges {
            out.add_edge(t)
                .expect("edge set of a linear system stays linear");
        }
        out
    }

    /// Applies a vertex relabeling `perm[old] = new`, keeping edge order.
    pub fn relabel(&self, perm: &[Vertex]) -> LinearTripleSystem {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut out = LinearTripleSystem::new(self.n);
        for t in &self.edges {
            let [a, b, c] = t.vertices();
            out.add_triple(perm[a as usize], perm[b as usize], perm[c as usize])
                .expect("relabeling by a permutation preserves linearity");
        }
        out
    }

    /// The subsystem formed by the given edges (vertex set unchanged), in the
    /// order listed.
    pub fn subsystem(&self, ids: &[EdgeId]) -> LinearTripleSystem {
        let mut out = LinearTripleSystem::new(self.n);
        for &id in ids {
            out.add_edge(self.edges[id])
                .expect("subset of a linear system is linear");
        }
        out
    }
}

/// Validates a raw edge list from an untrusted source. Reports the first
/// violated invariant together with the edges witnessing it.
pub fn validate_edges(n: usize, edges: &[[Vertex; 3]]) -> Result<(), SystemError> {
    let mut seen: HashMap<(Vertex, Vertex), EdgeId> = HashMap::with_capacity(edges.len() * 3);
    let mut triples: HashMap<[Vertex; 3], EdgeId> = HashMap::with_capacity(edges.len());
    for (id, &[a, b, c]) in edges.iter().enumerate() {
        for v in [a, b, c] {
            if v as usize >= n {
                return Err(SystemError::VertexOutOfRange { vertex: v, n });
            }
        }
        if a == b || b == c || a == c {
            return Err(SystemError::DegenerateTriple([a, b, c]));
        }
        if !(a < b && b < c) {
            return Err(SystemError::UnorderedTriple { edge: id });
        }
        if let Some(&existing) = triples.get(&[a, b, c]) {
            return Err(SystemError::DuplicateEdge {
                edge: Triple([a, b, c]),
                existing,
            });
        }
        triples.insert([a, b, c], id);
        for pair in [(a, b), (a, c), (b, c)] {
            if let Some(&existing) = seen.get(&pair) {
                return Err(SystemError::LinearityViolation {
                    pair,
                    edges: (existing, id),
                });
            }
            seen.insert(pair, id);
        }
    }
    Ok(())
}

/// Plain serializable view of a system, used for JSON interchange.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemRecord {
    pub n: usize,
    pub edges: Vec<[Vertex; 3]>,
}

impl From<&LinearTripleSystem> for SystemRecord {
    fn from(sys: &LinearTripleSystem) -> Self {
        SystemRecord {
            n: sys.n(),
            edges: sys.edges().iter().map(|t| t.vertices()).collect(),
        }
    }
}

impl TryFrom<SystemRecord> for LinearTripleSystem {
    type Error = SystemError;

    fn try_from(rec: SystemRecord) -> Result<Self, Self::Error> {
        LinearTripleSystem::from_edges(rec.n, rec.edges)
    }
}
