//! Forbidden induced subgraphs.
//!
//! A [`ForbiddenFamily`] holds the user's patterns together with the
//! catalogue of *partial* patterns: every non-empty graph obtained from a
//! pattern by dropping some of its connected components, deduplicated up to
//! isomorphism. The enumerator measures progress by how many partials occur
//! in `G[S]`, and grows `S` by *tight enrichments*: sets `U = φ(F') \ S` for
//! an induced embedding `φ` of a partial `F'` that `G[S]` does not contain
//! yet.
//!
//! Embeddings are found by plain backtracking. Pattern vertices are placed
//! in breadth-first order inside each component so that every vertex after
//! the first of its component is drawn from the host neighbors of an already
//! placed vertex. Host candidates are tried in ascending id order, which makes
//! "the first enrichment found" deterministic.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// A small pattern graph with vertices `0..order` and a precomputed
/// placement order for embedding search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGraph {
    graph: Graph,
    components: Vec<VertexSet>,
    /// Placement order of pattern vertices.
    order: Vec<Vertex>,
    /// For each pattern vertex, an earlier-placed neighbor (if any).
    anchor: Vec<Option<Vertex>>,
}

impl PatternGraph {
    /// Wraps `graph` (relabeled to `0..n`). Rejects the empty graph.
    pub fn new(graph: &Graph) -> Result<Self> {
        if graph.is_empty() {
            return Err(Error::invalid("forbidden pattern has no vertices"));
        }
        let graph = graph.compacted();
        let components = graph.components();
        let n = graph.order();
        let mut order = Vec::with_capacity(n);
        let mut anchor = vec![None; n];
        let mut placed = vec![false; n];
        for comp in &components {
            let root = comp.first().expect("components are non-empty");
            placed[root] = true;
            let mut head = order.len();
            order.push(root);
            while head < order.len() {
                let v = order[head];
                head += 1;
                for &u in graph.neighbors(v) {
                    if !placed[u] {
                        placed[u] = true;
                        anchor[u] = Some(v);
                        order.push(u);
                    }
                }
            }
        }
        Ok(Self {
            graph,
            components,
            order,
            anchor,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn components(&self) -> &[VertexSet] {
        &self.components
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Pattern induced on a union of its components, relabeled.
    fn restrict(&self, keep: &VertexSet) -> PatternGraph {
        let sub = self.graph.induced_subgraph(keep).expect("pattern vertices");
        PatternGraph::new(&sub).expect("non-empty component selection")
    }
}

/// Induced embedding of a pattern: `map[i]` is the host image of pattern
/// vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<Vertex>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }
}

/// Finite set of forbidden induced subgraphs plus its partial catalogue.
#[derive(Clone, Debug, Default)]
pub struct ForbiddenFamily {
    patterns: Vec<PatternGraph>,
    partials: Vec<PatternGraph>,
    max_order: usize,
}

impl ForbiddenFamily {
    /// The family with no patterns: every graph is free of it.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds the family and its partial catalogue.
    pub fn new<'a, I>(patterns: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Graph>,
    {
        let patterns = patterns
            .into_iter()
            .map(PatternGraph::new)
            .collect::<Result<Vec<_>>>()?;
        let mut partials: Vec<PatternGraph> = Vec::new();
        for pattern in &patterns {
            let comps = pattern.components();
            for mask in 1u64..(1u64 << comps.len()) {
                let keep: VertexSet = comps
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .flat_map(|(_, c)| c.iter())
                    .collect();
                let candidate = pattern.restrict(&keep);
                if !partials
                    .iter()
                    .any(|p| isomorphic(p.graph(), candidate.graph()))
                {
                    partials.push(candidate);
                }
            }
        }
        let max_order = patterns.iter().map(PatternGraph::order).max().unwrap_or(0);
        Ok(Self {
            patterns,
            partials,
            max_order,
        })
    }

    pub fn patterns(&self) -> &[PatternGraph] {
        &self.patterns
    }

    pub fn partials(&self) -> &[PatternGraph] {
        &self.partials
    }

    /// Largest pattern order, `||F||`.
    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}

/// Isomorphism test by trying every bijection. Only meant for pattern-sized
/// graphs.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let a = a.compacted();
    let b = b.compacted();
    let degrees = |g: &Graph| {
        g.vertices()
            .map(|v| g.degree(v))
            .sorted()
            .collect::<Vec<_>>()
    };
    if degrees(&a) != degrees(&b) {
        return false;
    }
    let n = a.order();
    (0..n)
        .permutations(n)
        .any(|perm| a.edges().all(|(u, v)| b.has_edge(perm[u], perm[v])))
}

/// Backtracking over induced embeddings of `pattern` into the host vertices
/// flagged in `allowed`. `visit` sees each embedding's map and may stop the
/// search.
fn search<F>(
    host: &Graph,
    allowed: &[bool],
    pattern: &PatternGraph,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    let n = pattern.order();
    if n > host.order() {
        return ControlFlow::Continue(());
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; host.id_bound()];
    let all: Vec<Vertex> = host.vertices().filter(|&v| allowed[v]).collect();
    place(host, allowed, pattern, &all, 0, &mut map, &mut used, visit)
}

#[allow(clippy::too_many_arguments)]
fn place<F>(
    host: &Graph,
    allowed: &[bool],
    pattern: &PatternGraph,
    all: &[Vertex],
    depth: usize,
    map: &mut [Vertex],
    used: &mut [bool],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    if depth == pattern.order.len() {
        return visit(map);
    }
    let pv = pattern.order[depth];
    let candidates: &[Vertex] = match pattern.anchor[pv] {
        Some(a) => host.neighbors(map[a]),
        None => all,
    };
    let need = pattern.graph.degree(pv);
    for &h in candidates {
        if !allowed[h] || used[h] || host.degree(h) < need {
            continue;
        }
        let consistent = pattern.order[..depth]
            .iter()
            .all(|&q| pattern.graph.has_edge(pv, q) == host.has_edge(h, map[q]));
        if !consistent {
            continue;
        }
        map[pv] = h;
        used[h] = true;
        let flow = place(host, allowed, pattern, all, depth + 1, map, used, visit);
        used[h] = false;
        flow?;
    }
    map[pv] = usize::MAX;
    ControlFlow::Continue(())
}

/// Calls `visit` for every induced embedding of `pattern` into `G[scope]`.
pub fn for_each_embedding<F>(g: &Graph, scope: &VertexSet, pattern: &PatternGraph, mut visit: F)
where
    F: FnMut(&Embedding) -> ControlFlow<()>,
{
    let allowed = g.mask(scope);
    let _ = search(g, &allowed, pattern, &mut |map| {
        visit(&Embedding { map: map.to_vec() })
    });
}

/// Whether `G[scope]` has an induced subgraph isomorphic to `pattern`.
pub fn contains_induced(g: &Graph, scope: &VertexSet, pattern: &PatternGraph) -> bool {
    let allowed = g.mask(scope);
    search(g, &allowed, pattern, &mut |_| ControlFlow::Break(())).is_break()
}

/// Whether `G[scope]` avoids every pattern of the family (partials are not
/// consulted).
pub fn is_family_free(g: &Graph, scope: &VertexSet, family: &ForbiddenFamily) -> bool {
    family
        .patterns()
        .iter()
        .all(|p| !contains_induced(g, scope, p))
}

/// `g(scope)`: the number of catalogue partials present in `G[scope]`.
pub fn count_present_partials(g: &Graph, scope: &VertexSet, family: &ForbiddenFamily) -> usize {
    family
        .partials()
        .iter()
        .filter(|p| contains_induced(g, scope, p))
        .count()
}

/// Runs `visit` on `φ(F') \ s` for every embedding `φ` of every partial `F'`
/// absent from `G[s]`, with the image avoiding `t`.
fn for_each_tight_enrichment<F>(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    family: &ForbiddenFamily,
    mut visit: F,
) where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    let in_s = g.mask(s);
    let mut allowed = vec![true; g.id_bound()];
    for v in t {
        if v < allowed.len() {
            allowed[v] = false;
        }
    }
    for partial in family.partials() {
        if contains_induced(g, s, partial) {
            continue;
        }
        let flow = search(g, &allowed, partial, &mut |map| {
            let u: VertexSet = map.iter().copied().filter(|&v| !in_s[v]).collect();
            visit(u)
        });
        if flow.is_break() {
            return;
        }
    }
}

/// Step-3 enrichment: a tight enrichment `U` of `s`, disjoint from `s ∪ t`,
/// such that every component of `G[U]` has a neighbor in `s`. Returns the
/// first one in search order.
///
/// Requires `G[s]` to be free of the family, so that every embedding leaves
/// a non-empty remainder outside `s`.
pub fn find_step3_enrichment(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    family: &ForbiddenFamily,
) -> Option<VertexSet> {
    let in_s = g.mask(s);
    let mut found = None;
    for_each_tight_enrichment(g, s, t, family, |u| {
        if u.is_empty() {
            return ControlFlow::Continue(());
        }
        let sub = g.induced_subgraph(&u).expect("host vertices");
        let attached = sub
            .components()
            .iter()
            .all(|comp| comp.iter().any(|v| g.neighbors(v).iter().any(|&w| in_s[w])));
        if attached {
            found = Some(u);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// Step-4 support: every connected tight enrichment of `s` disjoint from
/// `s ∪ t` (deduplicated, ascending), and the union of them.
pub fn connected_enrichment_support(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    family: &ForbiddenFamily,
) -> (Vec<VertexSet>, VertexSet) {
    let mut found = BTreeSet::new();
    for_each_tight_enrichment(g, s, t, family, |u| {
        if !found.contains(&u) && g.is_connected_set(&u).unwrap_or(false) {
            found.insert(u);
        }
        ControlFlow::Continue(())
    });
    let support = found.iter().flat_map(|u| u.iter()).collect();
    (found.into_iter().collect(), support)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(gs: &[Graph]) -> ForbiddenFamily {
        ForbiddenFamily::new(gs).unwrap()
    }

    fn two_k2() -> Graph {
        Graph::from_edges(0..4, [(0, 1), (2, 3)]).unwrap()
    }

    fn partial_orders(f: &ForbiddenFamily) -> Vec<(usize, usize)> {
        f.partials()
            .iter()
            .map(|p| (p.order(), p.graph().size()))
            .collect()
    }

    #[test]
    fn catalogue_examples() {
        assert_eq!(partial_orders(&family(&[Graph::complete(3)])), vec![(3, 3)]);
        assert_eq!(partial_orders(&family(&[two_k2()])), vec![(2, 1), (4, 2)]);

        let c4k4 = Graph::cycle(4).disjoint_union(&Graph::complete(4));
        let f = family(std::slice::from_ref(&c4k4));
        assert_eq!(f.partials().len(), 3);
        assert!(isomorphic(f.partials()[0].graph(), &Graph::cycle(4)));
        assert!(isomorphic(f.partials()[1].graph(), &Graph::complete(4)));
        assert!(isomorphic(f.partials()[2].graph(), &c4k4));
        assert_eq!(f.max_order(), 8);
    }

    #[test]
    fn empty_pattern_rejected() {
        assert!(ForbiddenFamily::new(&[Graph::new()]).is_err());
    }

    #[test]
    fn containment_examples() {
        let k3 = PatternGraph::new(&Graph::complete(3)).unwrap();
        let all = |g: &Graph| g.vertex_set();
        assert!(contains_induced(
            &Graph::complete(3),
            &all(&Graph::complete(3)),
            &k3
        ));
        assert!(!contains_induced(
            &Graph::path(3),
            &all(&Graph::path(3)),
            &k3
        ));
        assert!(contains_induced(
            &Graph::complete(4),
            &all(&Graph::complete(4)),
            &k3
        ));
        // P3 is not an induced subgraph of K3
        let p3 = PatternGraph::new(&Graph::path(3)).unwrap();
        assert!(!contains_induced(
            &Graph::complete(3),
            &all(&Graph::complete(3)),
            &p3
        ));
    }

    #[test]
    fn freeness_examples() {
        let claw = Graph::star(3);
        let fam = family(std::slice::from_ref(&claw));
        assert!(!is_family_free(&claw, &claw.vertex_set(), &fam));
        let cut = claw.delete_vertex(3).unwrap();
        assert!(is_family_free(&cut, &cut.vertex_set(), &fam));
        assert!(is_family_free(
            &claw,
            &claw.vertex_set(),
            &ForbiddenFamily::empty()
        ));
    }

    #[test]
    fn partial_counts() {
        let k3 = family(&[Graph::complete(3)]);
        let g = Graph::complete(3);
        assert_eq!(count_present_partials(&g, &g.vertex_set(), &k3), 1);
        let p = Graph::path(3);
        assert_eq!(count_present_partials(&p, &p.vertex_set(), &k3), 0);
        let g = two_k2();
        assert_eq!(
            count_present_partials(&g, &g.vertex_set(), &family(&[two_k2()])),
            2
        );
    }

    #[test]
    fn step3_examples() {
        let k3 = family(&[Graph::complete(3)]);
        // triangle 0,1,2 with pendant 3-0
        let g = Graph::from_edges(0..4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let u = find_step3_enrichment(&g, &[0, 3].into(), &VertexSet::new(), &k3);
        assert_eq!(u, Some([1, 2].into()));

        let p = Graph::path(3);
        assert_eq!(
            find_step3_enrichment(&p, &[0].into(), &VertexSet::new(), &k3),
            None
        );

        let claw = Graph::star(3);
        let fam = family(std::slice::from_ref(&claw));
        assert_eq!(
            find_step3_enrichment(&claw, &[0].into(), &[1].into(), &fam),
            None
        );
    }

    #[test]
    fn step3_requires_attachment() {
        // triangle far from s: no component of U touches s
        let g = Graph::from_edges(0..5, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let k3 = family(&[Graph::complete(3)]);
        assert_eq!(
            find_step3_enrichment(&g, &[0].into(), &VertexSet::new(), &k3),
            None
        );
        let (us, support) = connected_enrichment_support(&g, &[0].into(), &VertexSet::new(), &k3);
        assert_eq!(us, vec![[2, 3, 4].into()]);
        assert_eq!(support, [2, 3, 4].into());
    }

    #[test]
    fn support_examples() {
        let k3 = family(&[Graph::complete(3)]);
        // triangle {1,2,3} joined to 0 by the edge 0-1
        let g = Graph::from_edges(0..4, [(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (us, support) = connected_enrichment_support(&g, &[0].into(), &VertexSet::new(), &k3);
        assert_eq!(us, vec![[1, 2, 3].into()]);
        assert_eq!(support, [1, 2, 3].into());

        let p = Graph::path(5);
        let (us, support) = connected_enrichment_support(&p, &[0].into(), &VertexSet::new(), &k3);
        assert!(us.is_empty() && support.is_empty());

        // two triangles hanging off a path from 0
        let g = Graph::from_edges(
            0..8,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (2, 4),
                (1, 5),
                (5, 6),
                (6, 7),
                (5, 7),
            ],
        )
        .unwrap();
        let (us, _) = connected_enrichment_support(&g, &[0].into(), &VertexSet::new(), &k3);
        assert_eq!(us, vec![[2, 3, 4].into(), [5, 6, 7].into()]);
    }

    #[test]
    fn enrichment_may_reuse_s() {
        // 2K2 with one edge inside s: U only needs the second edge
        let g = Graph::from_edges(0..5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let fam = family(&[two_k2()]);
        let (us, _) = connected_enrichment_support(&g, &[0, 1].into(), &VertexSet::new(), &fam);
        assert!(us.contains(&[3, 4].into()));
    }
}
