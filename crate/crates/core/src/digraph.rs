//! The digraph value type and its basic vocabulary.
//!
//! A [`Digraph`] is a finite loop-free digraph on the vertices `0..n`. Each
//! ordered pair carries at most one arc, so a pair of vertices is in one of
//! four states: no arc, one arc in either direction, or a digon. Everything
//! here is immutable once built; operations return new values.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of vertices of some host digraph, kept sorted and duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        Self(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    /// First vertex shared by both sets, if any.
    pub fn first_common(&self, other: &VertexSet) -> Option<usize> {
        self.iter().find(|&v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.first_common(other).is_none()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self(members)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        members.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// The three relations between disjoint vertex sets `X` and `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetRelation {
    /// Every vertex of `X` dominates every vertex of `Y`.
    pub dominates_all: bool,
    /// No arc goes from `Y` to `X`.
    pub no_back_arc: bool,
    /// Both of the above.
    pub strictly_dominates: bool,
}

/// A proper two-coloring of the underlying graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<bool>,
}

impl Bipartition {
    pub fn color(&self, v: usize) -> bool {
        self.side[v]
    }

    /// The two color classes; the first holds the smallest vertex of every
    /// connected component.
    pub fn parts(&self) -> (VertexSet, VertexSet) {
        let first = (0..self.side.len()).filter(|&v| !self.side[v]).collect();
        let second = (0..self.side.len()).filter(|&v| self.side[v]).collect();
        (first, second)
    }
}

/// A subdigraph induced by a vertex set, together with its relabeling.
///
/// Local vertex `i` of [`InducedSubdigraph::digraph`] is host vertex
/// `labels[i]`; labels are increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubdigraph {
    pub digraph: Digraph,
    labels: Vec<usize>,
}

impl InducedSubdigraph {
    /// Host label of a local vertex.
    pub fn original(&self, local: usize) -> usize {
        self.labels[local]
    }

    /// Local label of a host vertex, if it was kept.
    pub fn local(&self, original: usize) -> Option<usize> {
        self.labels.binary_search(&original).ok()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.labels[v]).collect()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Digraph {
    /// Builds a digraph on `0..n`; duplicate arcs collapse into one.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![false; n * n];
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u * n + v] = true;
        }
        Ok(Self::from_matrix(n, adj))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_matrix(n, vec![false; n * n])
    }

    /// Builds from a row-major `n * n` adjacency matrix with a false diagonal.
    pub(crate) fn from_matrix(n: usize, adj: Vec<bool>) -> Self {
        debug_assert_eq!(adj.len(), n * n);
        debug_assert!((0..n).all(|v| !adj[v * n + v]));
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for u in 0..n {
            for v in 0..n {
                if adj[u * n + v] {
                    out[u].push(v);
                    inn[v].push(u);
                }
            }
        }
        Self { n, adj, out, inn }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Range<usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// Whether the arc `u -> v` is present. `arc(v, v)` is false; vertices
    /// are not range-checked.
    #[inline]
    pub fn arc(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Whether `u` and `v` are joined by an arc in either direction.
    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.arc(u, v) || self.arc(v, u)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(())
    }

    /// Checked form of [`Digraph::arc`]: `u` dominates `v`.
    pub fn dominates(&self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        Ok(self.arc(u, v))
    }

    /// Checked form of [`Digraph::is_adjacent`].
    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        Ok(self.is_adjacent(u, v))
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn underlying_graph(&self) -> UndirectedGraph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for (u, v) in self.arcs() {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        UndirectedGraph::from_matrix(n, adj)
    }

    /// The digraph with every arc reversed.
    pub fn inverse(&self) -> Digraph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for (u, v) in self.arcs() {
            adj[v * n + u] = true;
        }
        Digraph::from_matrix(n, adj)
    }

    pub fn induced(&self, set: &VertexSet) -> Result<InducedSubdigraph> {
        set.check_range(self.n)?;
        let labels = set.as_slice().to_vec();
        let k = labels.len();
        let mut adj = vec![false; k * k];
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate() {
                adj[i * k + j] = i != j && self.arc(u, v);
            }
        }
        Ok(InducedSubdigraph {
            digraph: Digraph::from_matrix(k, adj),
            labels,
        })
    }

    /// `D - B`: the subdigraph induced by the complement of `removed`.
    pub fn remove(&self, removed: &VertexSet) -> Result<InducedSubdigraph> {
        removed.check_range(self.n)?;
        self.induced(&self.vertex_set().difference(removed))
    }

    /// A copy of this digraph with extra arcs added.
    pub fn with_arcs(&self, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Digraph> {
        Digraph::new(self.n, self.arcs().chain(arcs))
    }

    pub fn set_relation(&self, x: &VertexSet, y: &VertexSet) -> Result<SetRelation> {
        x.check_range(self.n)?;
        y.check_range(self.n)?;
        if let Some(v) = x.first_common(y) {
            return Err(Error::Overlap(v));
        }
        let dominates_all = x.iter().all(|u| y.iter().all(|v| self.arc(u, v)));
        let no_back_arc = y.iter().all(|v| x.iter().all(|u| !self.arc(v, u)));
        Ok(SetRelation {
            dominates_all,
            no_back_arc,
            strictly_dominates: dominates_all && no_back_arc,
        })
    }

    /// Connectivity of the underlying graph. The empty digraph is connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in self.out[u].iter().chain(&self.inn[u]) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Number of arcs on a shortest directed path from `u` to `v`, or `None`
    /// when `v` is unreachable. `distance(v, v)` is zero.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        Ok(self.bfs_from(u)[v])
    }

    /// Directed distances from `source` to every vertex.
    pub fn bfs_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.out[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_semicomplete(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.is_adjacent(u, v)))
    }

    pub fn is_stable(&self, set: &VertexSet) -> bool {
        let s = set.as_slice();
        s.iter().enumerate().all(|(i, &u)| {
            s[i + 1..]
                .iter()
                .all(|&v| u >= self.n || v >= self.n || !self.is_adjacent(u, v))
        })
    }

    /// A proper two-coloring of `U(D)`, or `None` if it has an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        self.underlying_graph().two_coloring()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Bipartite, and every pair split by the coloring is adjacent.
    /// An edgeless digraph passes with one side empty.
    pub fn is_semicomplete_bipartite(&self) -> bool {
        let Some(coloring) = self.bipartition() else {
            return false;
        };
        let (left, right) = coloring.parts();
        let complete = left.iter().all(|u| right.iter().all(|v| self.is_adjacent(u, v)));
        complete
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

/// A simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<bool>,
    nbrs: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![false; n * n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(Self::from_matrix(n, adj))
    }

    pub(crate) fn from_matrix(n: usize, adj: Vec<bool>) -> Self {
        let nbrs = (0..n)
            .map(|u| (0..n).filter(|&v| adj[u * n + v]).collect())
            .collect();
        Self { n, adj, nbrs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nbrs
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn complement(&self) -> UndirectedGraph {
        let n = self.n;
        let adj = (0..n * n).map(|i| i / n != i % n && !self.adj[i]).collect();
        UndirectedGraph::from_matrix(n, adj)
    }

    /// Breadth-first two-coloring; each component's smallest vertex gets
    /// color `false`.
    pub fn two_coloring(&self) -> Option<Bipartition> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap_or(false);
                for &w in &self.nbrs[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition {
            side: color.into_iter().map(|c| c.unwrap_or(false)).collect(),
        })
    }

    /// If the subgraph induced by `set` is a chordless cycle (length >= 3),
    /// returns its vertices in cyclic order starting at the smallest one.
    pub fn chordless_cycle_order(&self, set: &[usize]) -> Option<Vec<usize>> {
        let k = set.len();
        if k < 3 {
            return None;
        }
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        let degree_two = set
            .iter()
            .all(|&v| self.nbrs[v].iter().filter(|&&w| inside[w]).count() == 2);
        if !degree_two {
            return None;
        }
        let start = *set.iter().min()?;
        let mut order = Vec::with_capacity(k);
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            order.push(cur);
            let next = self.nbrs[cur].iter().copied().find(|&w| inside[w] && w != prev)?;
            if next == start {
                break;
            }
            if order.len() == k {
                return None;
            }
            prev = cur;
            cur = next;
        }
        // Two-regular and connected means one cycle through every vertex.
        (order.len() == k).then_some(order)
    }
}
