//! Undirected simple graphs with stable vertex identities.
//!
//! A [`Graph`] is a value: deleting vertices produces a new graph and leaves
//! the input untouched. Surviving vertices keep their ids, so a vertex set
//! computed deep inside a recursion on `G - X` is directly a vertex set of
//! the original `G`.
//!
//! All iteration happens in ascending id order.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An ordered, duplicate-free set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: Vertex) -> Self {
        Self(BTreeSet::from([v]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    /// Smallest member.
    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        Self(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        Self(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        Self(self.0.difference(&other.0).copied().collect())
    }

    pub fn with(&self, v: Vertex) -> VertexSet {
        let mut out = self.clone();
        out.insert(v);
        out
    }

    pub fn without(&self, v: Vertex) -> VertexSet {
        let mut out = self.clone();
        out.remove(v);
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// Comma-separated ascending ids, e.g. `0,1,2`; the empty set prints as nothing.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl Extend<Vertex> for VertexSet {
    fn extend<I: IntoIterator<Item = Vertex>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(arr: [Vertex; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = std::collections::btree_set::IntoIter<Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Undirected simple graph.
///
/// Adjacency is stored densely by id: slot `v` is `None` when `v` is not a
/// vertex, otherwise it holds the sorted neighbor list of `v`. Trailing empty
/// slots are trimmed so that structural equality is id-set equality plus
/// edge-set equality.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Option<Vec<Vertex>>>,
    order: usize,
    size: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph on the given vertex ids with the given edges.
    ///
    /// Edge endpoints must be listed as vertices; self-loops and repeated
    /// edges are rejected.
    pub fn from_edges<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds an isolated vertex; no-op if `v` is already present.
    pub fn add_vertex(&mut self, v: Vertex) {
        if v >= self.adj.len() {
            self.adj.resize(v + 1, None);
        }
        if self.adj[v].is_none() {
            self.adj[v] = Some(Vec::new());
            self.order += 1;
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let nu = self.adj[u].as_mut().expect("checked");
        match nu.binary_search(&v) {
            Ok(_) => return Err(Error::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => nu.insert(pos, v),
        }
        let nv = self.adj[v].as_mut().expect("checked");
        let pos = nv.binary_search(&u).unwrap_err();
        nv.insert(pos, u);
        self.size += 1;
        Ok(())
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(0..n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Cycle on `0..n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(0..n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(0..n, edges).expect("valid clique")
    }

    /// Star with center `0` and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(0..=leaves, (1..=leaves).map(|v| (0, v))).expect("valid star")
    }

    /// Disjoint union; the vertices of `other` are shifted past the largest
    /// id of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.id_bound();
        let mut g = self.clone();
        for v in other.vertices() {
            g.add_vertex(v + shift);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift).expect("disjoint copy");
        }
        g
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    /// One past the largest vertex id (0 for the empty graph).
    pub fn id_bound(&self) -> usize {
        self.adj.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        matches!(self.adj.get(v), Some(Some(_)))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj
            .iter()
            .enumerate()
            .filter_map(|(v, slot)| slot.as_ref().map(|_| v))
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// Sorted neighbors of `v`; empty if `v` is absent.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        match self.adj.get(v) {
            Some(Some(n)) => n,
            _ => &[],
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn check_set(&self, x: &VertexSet) -> Result<()> {
        x.iter().try_for_each(|v| self.check_vertex(v))
    }

    /// Dense membership mask of `x`, indexed by vertex id.
    pub(crate) fn mask(&self, x: &VertexSet) -> Vec<bool> {
        let mut m = vec![false; self.id_bound()];
        for v in x {
            if v < m.len() {
                m[v] = true;
            }
        }
        m
    }

    /// Open neighborhood `N(x) = N[x] \ x`.
    pub fn neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        let inside = self.mask(x);
        let mut out = VertexSet::new();
        for v in x {
            out.extend(self.neighbors(v).iter().copied().filter(|&u| !inside[u]));
        }
        Ok(out)
    }

    /// `R(s, p)`: every vertex reachable in `G - p` from a vertex of `s \ p`.
    pub fn reachable(&self, s: &VertexSet, p: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        self.check_set(p)?;
        let mut seen = self.mask(p);
        let mut out = VertexSet::new();
        let mut queue = VecDeque::new();
        for v in s {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            out.insert(v);
            for &u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        Ok(out)
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.id_bound()];
        let mut out = Vec::new();
        for root in self.vertices() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = VertexSet::new();
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Whether `G[x]` is connected. The empty set is not.
    pub fn is_connected_set(&self, x: &VertexSet) -> Result<bool> {
        self.check_set(x)?;
        let Some(root) = x.first() else {
            return Ok(false);
        };
        let inside = self.mask(x);
        let mut seen = vec![false; self.id_bound()];
        seen[root] = true;
        let mut stack = vec![root];
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for &u in self.neighbors(v) {
                if inside[u] && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        Ok(count == x.len())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `G - x`. Surviving vertices keep their ids.
    pub fn delete_vertices(&self, x: &VertexSet) -> Result<Graph> {
        self.check_set(x)?;
        if x.is_empty() {
            return Ok(self.clone());
        }
        let gone = self.mask(x);
        let mut adj: Vec<Option<Vec<Vertex>>> = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, slot)| match slot {
                Some(n) if !gone[v] => Some(n.iter().copied().filter(|&u| !gone[u]).collect()),
                _ => None,
            })
            .collect();
        while matches!(adj.last(), Some(None)) {
            adj.pop();
        }
        let order = self.order - x.len();
        let size = adj.iter().flatten().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { adj, order, size })
    }

    pub fn delete_vertex(&self, v: Vertex) -> Result<Graph> {
        self.delete_vertices(&VertexSet::singleton(v))
    }

    /// `G[x]`, keeping ids.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<Graph> {
        self.check_set(x)?;
        let rest = self.vertex_set().difference(x);
        self.delete_vertices(&rest)
    }

    /// Isomorphic copy with ids relabeled `0..order` in ascending order.
    pub fn compacted(&self) -> Graph {
        let mut index = vec![usize::MAX; self.id_bound()];
        for (i, v) in self.vertices().enumerate() {
            index[v] = i;
        }
        Graph::from_edges(
            0..self.order,
            self.edges().map(|(u, v)| (index[u], index[v])),
        )
        .expect("relabeling preserves simplicity")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertex_set())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn claw() -> Graph {
        Graph::star(3)
    }

    #[test]
    fn neighborhood_examples() {
        let p = Graph::path(3);
        assert_eq!(p.neighborhood(&[0].into()).unwrap(), [1].into());
        assert_eq!(p.neighborhood(&[0, 1, 2].into()).unwrap(), VertexSet::new());
        assert_eq!(claw().neighborhood(&[1, 2].into()).unwrap(), [0].into());
        assert_eq!(p.neighborhood(&[7].into()), Err(Error::UnknownVertex(7)));
    }

    #[test]
    fn reachable_examples() {
        let p = Graph::path(4);
        let s = VertexSet::from([0]);
        assert_eq!(p.reachable(&s, &[2].into()).unwrap(), [0, 1].into());
        assert_eq!(
            p.reachable(&s, &VertexSet::new()).unwrap(),
            [0, 1, 2, 3].into()
        );
        assert_eq!(p.reachable(&s, &[0].into()).unwrap(), VertexSet::new());
        assert!(p.reachable(&s, &[9].into()).is_err());
    }

    #[test]
    fn components_examples() {
        let two = Graph::from_edges(0..4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components(), vec![[0, 1].into(), [2, 3].into()]);
        assert!(Graph::new().components().is_empty());
        assert_eq!(Graph::complete(3).components(), vec![[0, 1, 2].into()]);
    }

    #[test]
    fn connected_set_examples() {
        let p = Graph::path(3);
        assert!(!p.is_connected_set(&[0, 2].into()).unwrap());
        assert!(p.is_connected_set(&[0, 1].into()).unwrap());
        assert!(p.is_connected_set(&[2].into()).unwrap());
        assert!(!p.is_connected_set(&VertexSet::new()).unwrap());
    }

    #[test]
    fn deletion_keeps_ids() {
        let k3 = Graph::complete(3);
        let e = k3.delete_vertices(&[2].into()).unwrap();
        assert_eq!(e, Graph::path(2));
        assert_eq!(k3.order(), 3, "input untouched");
        assert_eq!(k3.delete_vertices(&VertexSet::new()).unwrap(), k3);
        assert!(Graph::path(2)
            .delete_vertices(&[0, 1].into())
            .unwrap()
            .is_empty());

        let g = Graph::path(4).delete_vertex(1).unwrap();
        assert_eq!(g.vertex_set(), [0, 2, 3].into());
        assert!(g.has_edge(2, 3));
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::path(2);
        assert_eq!(g.add_edge(1, 0), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(g.add_edge(1, 5), Err(Error::UnknownVertex(5)));
    }

    #[test]
    fn compacted_relabels() {
        let g = Graph::from_edges([3, 7, 9], [(3, 9)]).unwrap();
        let c = g.compacted();
        assert_eq!(c.vertex_set(), [0, 1, 2].into());
        assert!(c.has_edge(0, 2));
        assert_eq!(c.size(), 1);
    }

    #[test]
    fn display_is_comma_separated() {
        assert_eq!(VertexSet::from([3, 1, 2]).to_string(), "1,2,3");
        assert_eq!(VertexSet::new().to_string(), "");
    }
}
