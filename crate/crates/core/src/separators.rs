//! Minimum left-restricted `(S, T)`-separators.
//!
//! A left-restricted separator may use vertices of `T` but never of `S`.
//! Its minimum size `λ(S, T)` is computed as a maximum flow in the usual
//! split-vertex network: every vertex `v ∉ S` becomes an arc `v⁻ → v⁺` of
//! capacity 1, every edge `uv` outside `S` becomes arcs `u⁺ → v⁻` and
//! `v⁺ → u⁻` of capacity 2, all of `S` is merged into the source, and a fresh
//! sink is attached behind every vertex of `T` (so `T` stays cuttable).
//!
//! From the final residual network we read off the two extremal minimum
//! separators: the *closest* one `P⁻` (the saturated vertex arcs leaving the
//! source side) and the *farthest* one `P⁺` (the saturated vertex arcs
//! entering the sink side). Every minimum separator `P` satisfies
//! `R(S, P⁻) ⊆ R(S, P) ⊆ R(S, P⁺)`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Value of `λ(S, T)` as far as it was determined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lambda {
    Finite(usize),
    /// `S` and `T` intersect; no left-restricted separator exists.
    Infinite,
    /// The flow exceeded the budget handed to [`analyze`].
    ExceedsBudget,
}

impl Lambda {
    pub fn finite(self) -> Option<usize> {
        match self {
            Lambda::Finite(x) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda::Finite(x) => write!(f, "{x}"),
            Lambda::Infinite => f.write_str("INF"),
            Lambda::ExceedsBudget => f.write_str("OVER"),
        }
    }
}

/// Extremal minimum separators of a finite instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalSeparators {
    pub lambda: usize,
    /// `P⁻`
    pub closest: VertexSet,
    /// `P⁺`
    pub farthest: VertexSet,
    /// `R(S, P⁻)`
    pub reach_closest: VertexSet,
    /// `R(S, P⁺)`
    pub reach_farthest: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparatorAnalysis {
    Infinite,
    ExceedsBudget,
    Finite(ExtremalSeparators),
}

impl SeparatorAnalysis {
    pub fn lambda(&self) -> Lambda {
        match self {
            SeparatorAnalysis::Infinite => Lambda::Infinite,
            SeparatorAnalysis::ExceedsBudget => Lambda::ExceedsBudget,
            SeparatorAnalysis::Finite(e) => Lambda::Finite(e.lambda),
        }
    }

    pub fn extremal(&self) -> Option<&ExtremalSeparators> {
        match self {
            SeparatorAnalysis::Finite(e) => Some(e),
            _ => None,
        }
    }

    pub fn into_extremal(self) -> Option<ExtremalSeparators> {
        match self {
            SeparatorAnalysis::Finite(e) => Some(e),
            _ => None,
        }
    }
}

const SOURCE: usize = 0;
const SINK: usize = 1;
const VERTEX_CAP: u32 = 1;
const EDGE_CAP: u32 = 2;

fn inner(v: Vertex) -> usize {
    2 + 2 * v
}

fn outer(v: Vertex) -> usize {
    3 + 2 * v
}

#[derive(Clone, Copy, Debug)]
struct Arc {
    to: usize,
    residual: u32,
}

/// Residual network; arc `e ^ 1` is the reverse of arc `e`.
struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn build(g: &Graph, in_s: &[bool], t: &VertexSet) -> Self {
        let mut net = FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); 2 + 2 * g.id_bound()],
        };
        for v in g.vertices().filter(|&v| !in_s[v]) {
            net.add_arc(inner(v), outer(v), VERTEX_CAP);
        }
        for (u, v) in g.edges() {
            match (in_s[u], in_s[v]) {
                (true, true) => {}
                (true, false) => net.add_arc(SOURCE, inner(v), EDGE_CAP),
                (false, true) => net.add_arc(SOURCE, inner(u), EDGE_CAP),
                (false, false) => {
                    net.add_arc(outer(u), inner(v), EDGE_CAP);
                    net.add_arc(outer(v), inner(u), EDGE_CAP);
                }
            }
        }
        for w in t {
            net.add_arc(outer(w), SINK, EDGE_CAP);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let e = self.arcs.len();
        self.arcs.push(Arc { to, residual: cap });
        self.arcs.push(Arc {
            to: from,
            residual: 0,
        });
        self.out[from].push(e);
        self.out[to].push(e + 1);
    }

    /// One breadth-first augmentation. Returns whether flow increased.
    fn augment(&mut self) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[SOURCE] = true;
        let mut queue = VecDeque::from([SOURCE]);
        'bfs: while let Some(x) = queue.pop_front() {
            for &e in &self.out[x] {
                let Arc { to, residual } = self.arcs[e];
                if residual > 0 && !seen[to] {
                    seen[to] = true;
                    via[to] = e;
                    if to == SINK {
                        break 'bfs;
                    }
                    queue.push_back(to);
                }
            }
        }
        if !seen[SINK] {
            return false;
        }
        let mut bottleneck = u32::MAX;
        let mut x = SINK;
        while x != SOURCE {
            let e = via[x];
            bottleneck = bottleneck.min(self.arcs[e].residual);
            x = self.arcs[e ^ 1].to;
        }
        let mut x = SINK;
        while x != SOURCE {
            let e = via[x];
            self.arcs[e].residual -= bottleneck;
            self.arcs[e ^ 1].residual += bottleneck;
            x = self.arcs[e ^ 1].to;
        }
        true
    }

    /// Nodes reachable from the source in the residual network.
    fn source_side(&self) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[SOURCE] = true;
        let mut stack = vec![SOURCE];
        while let Some(x) = stack.pop() {
            for &e in &self.out[x] {
                let Arc { to, residual } = self.arcs[e];
                if residual > 0 && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }

    /// Nodes that can reach the sink in the residual network.
    fn sink_side(&self) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[SINK] = true;
        let mut stack = vec![SINK];
        while let Some(y) = stack.pop() {
            for &e in &self.out[y] {
                let from = self.arcs[e].to;
                if self.arcs[e ^ 1].residual > 0 && !seen[from] {
                    seen[from] = true;
                    stack.push(from);
                }
            }
        }
        seen
    }
}

/// Computes `λ(s, t)` with at most `budget + 1` augmentations, and the
/// extremal minimum separators when the value is at most `budget`.
pub fn analyze(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    budget: usize,
) -> Result<SeparatorAnalysis> {
    g.check_set(s)?;
    g.check_set(t)?;
    if s.is_empty() {
        return Err(Error::invalid("separator source set is empty"));
    }
    if !s.is_disjoint(t) {
        return Ok(SeparatorAnalysis::Infinite);
    }
    let in_s = g.mask(s);
    let mut net = FlowNetwork::build(g, &in_s, t);
    let mut flow = 0;
    while net.augment() {
        flow += 1;
        if flow > budget {
            return Ok(SeparatorAnalysis::ExceedsBudget);
        }
    }
    let source_side = net.source_side();
    let sink_side = net.sink_side();
    let candidates = || g.vertices().filter(|&v| !in_s[v]);
    let closest: VertexSet = candidates()
        .filter(|&v| source_side[inner(v)] && !source_side[outer(v)])
        .collect();
    let farthest: VertexSet = candidates()
        .filter(|&v| sink_side[outer(v)] && !sink_side[inner(v)])
        .collect();
    if closest.len() != flow || farthest.len() != flow {
        return Err(Error::Internal(
            "extremal separator size differs from flow value",
        ));
    }
    Ok(SeparatorAnalysis::Finite(ExtremalSeparators {
        lambda: flow,
        reach_closest: g.reachable(s, &closest)?,
        reach_farthest: g.reachable(s, &farthest)?,
        closest,
        farthest,
    }))
}

/// Whether `λ(s, t ∪ {v}) > λ(s, t)`: exactly when `v ∈ R(s, P⁻)`.
pub fn increase_vertex_left(analysis: &ExtremalSeparators, v: Vertex) -> bool {
    analysis.reach_closest.contains(v)
}

/// Whether `λ(s ∪ {v}, t) > λ(s, t)`: exactly when `v ∈ R(t, P⁺) ∪ P⁺`.
pub fn increase_vertex_right(
    g: &Graph,
    t: &VertexSet,
    analysis: &ExtremalSeparators,
    v: Vertex,
) -> Result<bool> {
    if analysis.farthest.contains(v) {
        return Ok(true);
    }
    Ok(g.reachable(t, &analysis.farthest)?.contains(v))
}

/// Smallest `v ∈ z` whose addition to `t` raises `λ`. If there is none,
/// adding all of `z` to `t` leaves `λ` unchanged.
pub fn find_increasing_vertex(z: &VertexSet, analysis: &ExtremalSeparators) -> Option<Vertex> {
    z.iter().find(|&v| increase_vertex_left(analysis, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finite(g: &Graph, s: &[Vertex], t: &[Vertex]) -> ExtremalSeparators {
        let s: VertexSet = s.iter().copied().collect();
        let t: VertexSet = t.iter().copied().collect();
        analyze(g, &s, &t, g.order())
            .unwrap()
            .into_extremal()
            .expect("finite")
    }

    fn lambda(g: &Graph, s: &[Vertex], t: &[Vertex]) -> Lambda {
        let s: VertexSet = s.iter().copied().collect();
        let t: VertexSet = t.iter().copied().collect();
        analyze(g, &s, &t, g.order()).unwrap().lambda()
    }

    #[test]
    fn path_extremes() {
        let g = Graph::path(5);
        let a = finite(&g, &[0], &[4]);
        assert_eq!(a.lambda, 1);
        assert_eq!(a.closest, [1].into());
        assert_eq!(a.farthest, [4].into());
        assert_eq!(a.reach_closest, [0].into());
        assert_eq!(a.reach_farthest, [0, 1, 2, 3].into());
    }

    #[test]
    fn diamond_cuts_at_target() {
        let g = Graph::from_edges(0..4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let a = finite(&g, &[0], &[3]);
        assert_eq!(a.lambda, 1);
        assert_eq!(a.closest, [3].into());
        assert_eq!(a.farthest, [3].into());
    }

    #[test]
    fn overlap_and_budget() {
        let g = Graph::path(5);
        assert_eq!(lambda(&g, &[0], &[0]), Lambda::Infinite);
        let star = Graph::star(4);
        let s = VertexSet::from([0]);
        let t = VertexSet::from([1, 2, 3]);
        assert_eq!(
            analyze(&star, &s, &t, 2).unwrap(),
            SeparatorAnalysis::ExceedsBudget
        );
        assert_eq!(
            analyze(&star, &s, &t, 3).unwrap().lambda(),
            Lambda::Finite(3)
        );
    }

    #[test]
    fn disconnected_is_zero() {
        let g = Graph::from_edges(0..4, [(0, 1), (2, 3)]).unwrap();
        let a = finite(&g, &[0], &[3]);
        assert_eq!(a.lambda, 0);
        assert!(a.closest.is_empty() && a.farthest.is_empty());
        assert_eq!(a.reach_closest, [0, 1].into());
        assert_eq!(a.reach_farthest, [0, 1].into());
    }

    #[test]
    fn increase_left_examples() {
        let g = Graph::path(5);
        let a = finite(&g, &[0], &[4]);
        assert!(!increase_vertex_left(&a, 2));
        assert!(increase_vertex_left(&a, 0));
        assert_eq!(lambda(&g, &[0], &[2, 4]), Lambda::Finite(1));

        let star = Graph::star(4);
        let a = finite(&star, &[0], &[1]);
        assert_eq!(a.closest, [1].into());
        assert_eq!(a.reach_closest, [0, 2, 3, 4].into());
        assert!(increase_vertex_left(&a, 2));
        assert_eq!(lambda(&star, &[0], &[1, 2]), Lambda::Finite(2));
    }

    #[test]
    fn increase_right_examples() {
        let g = Graph::path(5);
        let t = VertexSet::from([4]);
        let a = finite(&g, &[0], &[4]);
        assert!(!increase_vertex_right(&g, &t, &a, 3).unwrap());
        assert_eq!(lambda(&g, &[0, 3], &[4]), Lambda::Finite(1));
        assert!(increase_vertex_right(&g, &t, &a, 4).unwrap());

        let g = Graph::from_edges(0..4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let t = VertexSet::from([3]);
        let a = finite(&g, &[0], &[3]);
        assert_eq!(a.farthest, [3].into());
        assert!(!increase_vertex_right(&g, &t, &a, 1).unwrap());
        assert_eq!(lambda(&g, &[0, 1], &[3]), Lambda::Finite(1));
    }

    #[test]
    fn increasing_vertex_search() {
        let g = Graph::path(5);
        let a = finite(&g, &[0], &[4]);
        assert_eq!(find_increasing_vertex(&[2, 3].into(), &a), None);
        assert_eq!(lambda(&g, &[0], &[2, 3, 4]), Lambda::Finite(1));
        assert_eq!(find_increasing_vertex(&VertexSet::new(), &a), None);

        let star = Graph::star(4);
        let a = finite(&star, &[0], &[1]);
        assert_eq!(find_increasing_vertex(&[2, 3].into(), &a), Some(2));
    }

    #[test]
    fn empty_source_rejected() {
        let g = Graph::path(2);
        assert!(analyze(&g, &VertexSet::new(), &[1].into(), 1).is_err());
        assert!(analyze(&g, &[5].into(), &[1].into(), 1).is_err());
    }
}
