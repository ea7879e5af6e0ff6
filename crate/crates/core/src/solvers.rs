//! Two applications of the enumerator.
//!
//! [`max_weight_secluded`] finds a heaviest connected `k`-secluded `F`-free
//! set. With positive weights an optimum is seclusion-maximal, so it is among
//! the sets enumerated from some singleton `S = {v}`.
//!
//! [`scattered_deletion`] decides whether at most `k` deletions leave a graph
//! in which every component avoids one of the families `F_1, ..., F_d`. It
//! branches on a vertex `v` either joining the deletion set or lying in a
//! surviving component; in the second case the component can be replaced by a
//! seclusion-maximal one with no larger neighborhood, which the enumerator
//! lists.

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::enumerator::{enumerate, EnumParams};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::subiso::{is_family_free, ForbiddenFamily};

#[derive(Clone, Debug)]
pub struct WeightedInstance {
    pub graph: Graph,
    pub weights: BTreeMap<Vertex, u64>,
    pub k: usize,
    pub family: ForbiddenFamily,
}

impl WeightedInstance {
    /// Every vertex needs a weight of at least 1, and every weight must
    /// belong to a vertex.
    pub fn new(
        graph: Graph,
        weights: BTreeMap<Vertex, u64>,
        k: usize,
        family: ForbiddenFamily,
    ) -> Result<Self> {
        for (&v, &w) in &weights {
            graph.check_vertex(v)?;
            if w == 0 {
                return Err(Error::invalid(format!("vertex {v} has weight 0")));
            }
        }
        if let Some(v) = graph.vertices().find(|v| !weights.contains_key(v)) {
            return Err(Error::invalid(format!("vertex {v} has no weight")));
        }
        Ok(Self {
            graph,
            weights,
            k,
            family,
        })
    }

    pub fn unit(graph: Graph, k: usize, family: ForbiddenFamily) -> Self {
        let weights = graph.vertices().map(|v| (v, 1)).collect();
        Self {
            graph,
            weights,
            k,
            family,
        }
    }

    pub fn weight_of(&self, set: &VertexSet) -> Result<u64> {
        set.iter().try_fold(0u64, |acc, v| {
            let w = *self.weights.get(&v).ok_or(Error::UnknownVertex(v))?;
            acc.checked_add(w).ok_or(Error::WeightOverflow)
        })
    }
}

/// Heaviest connected `F`-free set with at most `k` neighbors; ties go to
/// the lexicographically smallest member set.
pub fn max_weight_secluded(inst: &WeightedInstance) -> Result<Option<(VertexSet, u64)>> {
    let mut best: Option<(VertexSet, u64)> = None;
    let none = VertexSet::new();
    for v in inst.graph.vertices() {
        let s = VertexSet::singleton(v);
        let params = EnumParams::new(&inst.graph, &s, &none, inst.k, &inst.family);
        let mut failure = None;
        enumerate(params, |c| {
            // the stream is a superset; re-check before trusting it
            if !is_family_free(&inst.graph, &c.members, &inst.family) {
                return ControlFlow::Continue(());
            }
            match inst.weight_of(&c.members) {
                Ok(w) => {
                    let better = match &best {
                        None => true,
                        Some((m, bw)) => w > *bw || (w == *bw && c.members < *m),
                    };
                    if better {
                        best = Some((c.members, w));
                    }
                    ControlFlow::Continue(())
                }
                Err(e) => {
                    failure = Some(e);
                    ControlFlow::Break(())
                }
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
    }
    Ok(best)
}

#[derive(Clone, Debug)]
pub struct ScatteredInstance {
    pub graph: Graph,
    pub k: usize,
    pub families: Vec<ForbiddenFamily>,
}

impl ScatteredInstance {
    /// Needs at least one family, and no family may be empty (an empty family
    /// would admit every graph).
    pub fn new(graph: Graph, k: usize, families: Vec<ForbiddenFamily>) -> Result<Self> {
        if families.is_empty() {
            return Err(Error::invalid("at least one graph class is required"));
        }
        if families.iter().any(ForbiddenFamily::is_empty) {
            return Err(Error::invalid(
                "every class needs at least one forbidden pattern",
            ));
        }
        Ok(Self { graph, k, families })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScatteredStats {
    /// Recursive calls of the branching procedure.
    pub nodes: u64,
    pub max_depth: usize,
    /// Largest number of sets one complete enumeration produced, per budget.
    pub emitted_by_budget: BTreeMap<usize, u64>,
}

/// A deletion set of size at most `k`, or `None` if there is none.
pub fn scattered_deletion(inst: &ScatteredInstance) -> Result<Option<VertexSet>> {
    scattered_deletion_with_stats(inst).map(|(x, _)| x)
}

pub fn scattered_deletion_with_stats(
    inst: &ScatteredInstance,
) -> Result<(Option<VertexSet>, ScatteredStats)> {
    let mut stats = ScatteredStats::default();
    let x = solve(&inst.graph, inst.k, &inst.families, &mut stats, 0)?;
    Ok((x, stats))
}

fn solve(
    g: &Graph,
    k: usize,
    families: &[ForbiddenFamily],
    stats: &mut ScatteredStats,
    depth: usize,
) -> Result<Option<VertexSet>> {
    stats.nodes += 1;
    stats.max_depth = stats.max_depth.max(depth);

    let settled: VertexSet = g
        .components()
        .into_iter()
        .filter(|c| families.iter().any(|f| is_family_free(g, c, f)))
        .flatten()
        .collect();
    let g = if settled.is_empty() {
        Cow::Borrowed(g)
    } else {
        Cow::Owned(g.delete_vertices(&settled)?)
    };
    if g.is_empty() {
        return Ok(Some(VertexSet::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let v = g.vertices().next().expect("non-empty graph");

    if let Some(mut x) = solve(&g.delete_vertex(v)?, k - 1, families, stats, depth + 1)? {
        x.insert(v);
        return Ok(Some(x));
    }

    let s = VertexSet::singleton(v);
    let none = VertexSet::new();
    for family in families {
        for budget in 0..=k {
            let mut found = None;
            let mut failure = None;
            let run = enumerate(EnumParams::new(&g, &s, &none, budget, family), |c| {
                if c.boundary_size != budget || !is_family_free(&g, &c.members, family) {
                    return ControlFlow::Continue(());
                }
                let closed = c.members.union(&c.boundary);
                let rest = g
                    .delete_vertices(&closed)
                    .and_then(|rest| solve(&rest, k - budget, families, stats, depth + 1));
                match rest {
                    Ok(Some(mut x)) => {
                        x.extend(c.boundary.iter());
                        found = Some(x);
                        ControlFlow::Break(())
                    }
                    Ok(None) => ControlFlow::Continue(()),
                    Err(e) => {
                        failure = Some(e);
                        ControlFlow::Break(())
                    }
                }
            })?;
            if let Some(e) = failure {
                return Err(e);
            }
            if found.is_some() {
                return Ok(found);
            }
            let slot = stats.emitted_by_budget.entry(budget).or_default();
            *slot = (*slot).max(run.emitted);
        }
    }
    Ok(None)
}

/// Whether every component of `G - x` avoids at least one of the families.
pub fn verify_scattered(g: &Graph, x: &VertexSet, families: &[ForbiddenFamily]) -> Result<bool> {
    let rest = g.delete_vertices(x)?;
    Ok(rest
        .components()
        .iter()
        .all(|c| families.iter().any(|f| is_family_free(&rest, c, f))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(g: Graph) -> ForbiddenFamily {
        ForbiddenFamily::new(&[g]).unwrap()
    }

    #[test]
    fn claw_unit_weights() {
        let inst = WeightedInstance::unit(Graph::star(3), 1, fam(Graph::star(3)));
        let (c, w) = max_weight_secluded(&inst).unwrap().unwrap();
        assert_eq!(w, 3);
        assert_eq!(c, [0, 1, 2].into());
    }

    #[test]
    fn c5_with_heavy_universal_vertex() {
        let mut g = Graph::cycle(5);
        g.add_vertex(5);
        for v in 0..5 {
            g.add_edge(v, 5).unwrap();
        }
        let mut weights: BTreeMap<_, _> = (0..5).map(|v| (v, 1)).collect();
        weights.insert(5, 5);
        let inst = WeightedInstance::new(g, weights, 6, fam(Graph::complete(3))).unwrap();
        let (c, w) = max_weight_secluded(&inst).unwrap().unwrap();
        assert_eq!(w, 7);
        assert!(c.contains(5));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges([0], []).unwrap();
        let inst = WeightedInstance::new(g, [(0, 9)].into(), 0, fam(Graph::complete(3))).unwrap();
        assert_eq!(max_weight_secluded(&inst).unwrap(), Some(([0].into(), 9)));
    }

    #[test]
    fn triangle_without_room() {
        let inst = WeightedInstance::unit(Graph::complete(3), 0, fam(Graph::complete(3)));
        assert_eq!(max_weight_secluded(&inst).unwrap(), None);
    }

    #[test]
    fn weights_validated() {
        let g = Graph::path(2);
        assert!(
            WeightedInstance::new(g.clone(), [(0, 1)].into(), 0, ForbiddenFamily::empty()).is_err()
        );
        assert!(WeightedInstance::new(
            g.clone(),
            [(0, 1), (1, 0)].into(),
            0,
            ForbiddenFamily::empty()
        )
        .is_err());
        let big = WeightedInstance::new(
            g,
            [(0, u64::MAX), (1, 1)].into(),
            0,
            ForbiddenFamily::empty(),
        )
        .unwrap();
        assert_eq!(max_weight_secluded(&big), Err(Error::WeightOverflow));
    }

    #[test]
    fn scattered_examples() {
        let g = Graph::complete(3).disjoint_union(&Graph::star(3));
        let families = vec![fam(Graph::complete(3)), fam(Graph::star(3))];
        let inst = ScatteredInstance::new(g, 0, families).unwrap();
        assert_eq!(scattered_deletion(&inst).unwrap(), Some(VertexSet::new()));

        let k3 = || vec![fam(Graph::complete(3))];
        let one = ScatteredInstance::new(Graph::complete(3), 1, k3()).unwrap();
        let x = scattered_deletion(&one).unwrap().unwrap();
        assert_eq!(x.len(), 1);
        assert!(verify_scattered(&one.graph, &x, &one.families).unwrap());
        let zero = ScatteredInstance::new(Graph::complete(3), 0, k3()).unwrap();
        assert_eq!(scattered_deletion(&zero).unwrap(), None);
    }

    #[test]
    fn scattered_rejects_degenerate_classes() {
        assert!(ScatteredInstance::new(Graph::path(2), 1, vec![]).is_err());
        assert!(ScatteredInstance::new(Graph::path(2), 1, vec![ForbiddenFamily::empty()]).is_err());
    }

    #[test]
    fn verify_examples() {
        let k3 = [fam(Graph::complete(3))];
        assert!(verify_scattered(&Graph::complete(3), &[0].into(), &k3).unwrap());
        assert!(!verify_scattered(&Graph::complete(3), &VertexSet::new(), &k3).unwrap());
        assert!(verify_scattered(&Graph::new(), &VertexSet::new(), &k3).unwrap());
    }
}
