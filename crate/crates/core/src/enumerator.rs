//! Enumeration of seclusion-maximal connected `F`-free secluded sets.
//!
//! Given a graph `G`, a non-empty set `S`, a set `T` disjoint from `S`, a
//! budget `k` and a finite forbidden family `F`, [`enumerate`] streams a
//! superset of all sets `C` with `S ⊆ C ⊆ V(G) \ T` such that `G[C]` is
//! connected and `F`-free, `|N(C)| ≤ k`, and every strict superset with the
//! same properties has a strictly larger neighborhood.
//!
//! Each recursion node works on a reduced graph (some neighbors of the
//! eventual answer deleted) and runs these steps:
//!
//! 1. Stop if `λ(S, T) > k`, if `S` meets several components, or if `G[S]`
//!    already contains a forbidden pattern.
//! 2. If the component of `S` is `F`-free and avoids `T`, report it.
//! 3. If some tight enrichment `U` of `S` has every component of `G[U]`
//!    attached to `S`, branch on deleting each `u ∈ U` (budget `k - 1`) and
//!    on absorbing `U` into `S`.
//! 4. Otherwise let `𝒰` be the connected tight enrichments and `V(𝒰)` their
//!    union.
//!    - (a) If some `v ∈ V(𝒰)` raises `λ` when added to `T`, take the first
//!      `U ∈ 𝒰` containing it and branch on deleting each `u ∈ U`, on
//!      absorbing `U` into `S`, and on adding `U` to `T`.
//!    - (b) Otherwise take the farthest minimum separator `P` of
//!      `(S, T ∪ V(𝒰))`, grow `S` to `S' = R(S, P)`, pick `p = min P` and
//!      branch on deleting `p` and (if `p ∉ T`) on adding `p` to `S'`.
//!
//! The search tree has depth `O(k + |partials|)` and every node keeps only
//! its own sets and at most one reduced graph alive, so the space used is
//! polynomial no matter how many sets are reported.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::separators::{analyze, find_increasing_vertex, Lambda, SeparatorAnalysis};
use crate::subiso::{
    connected_enrichment_support, count_present_partials, find_step3_enrichment, is_family_free,
    ForbiddenFamily,
};

/// One enumeration instance `(G, S, T, k)` together with the family.
#[derive(Clone, Copy, Debug)]
pub struct EnumParams<'a> {
    pub graph: &'a Graph,
    pub s: &'a VertexSet,
    pub t: &'a VertexSet,
    pub k: usize,
    pub family: &'a ForbiddenFamily,
}

impl<'a> EnumParams<'a> {
    pub fn new(
        graph: &'a Graph,
        s: &'a VertexSet,
        t: &'a VertexSet,
        k: usize,
        family: &'a ForbiddenFamily,
    ) -> Self {
        Self {
            graph,
            s,
            t,
            k,
            family,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.graph.check_set(self.s)?;
        self.graph.check_set(self.t)?;
        if self.s.is_empty() {
            return Err(Error::invalid("S must be non-empty"));
        }
        if !self.s.is_disjoint(self.t) {
            return Err(Error::invalid("S and T must be disjoint"));
        }
        Ok(())
    }
}

/// A reported set, with its neighborhood in the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub members: VertexSet,
    pub boundary: VertexSet,
    pub boundary_size: usize,
}

impl Candidate {
    pub fn new(graph: &Graph, members: VertexSet) -> Result<Self> {
        let boundary = graph.neighborhood(&members)?;
        Ok(Self {
            boundary_size: boundary.len(),
            members,
            boundary,
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RecursionStats {
    pub nodes: u64,
    pub leaves: u64,
    /// Depth of the deepest node; the root has depth 0.
    pub max_depth: usize,
    pub emitted: u64,
}

/// Which step a recursion node ended in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// Step 1: no admissible set below this node.
    Pruned,
    /// Step 2: the component of `S` was reported.
    Reported,
    /// Step 3.
    AttachedEnrichment,
    /// Step 4a.
    SeparatorIncrease,
    /// Step 4b.
    FarthestPush,
}

/// State of a recursion node as seen by an [`Observer`].
#[derive(Clone, Copy, Debug)]
pub struct NodeView<'a> {
    pub depth: usize,
    pub params: EnumParams<'a>,
    pub lambda: Lambda,
}

/// Instrumentation hooks. Both callbacks default to no-ops.
pub trait Observer {
    /// Called once per node, after `λ(S, T)` is known.
    fn enter(&mut self, _node: &NodeView<'_>) {}
    /// Called when the node (and its whole subtree) is finished.
    fn leave(&mut self, _depth: usize, _step: Step) {}
}

impl Observer for () {}

/// Streams candidates to `sink`; the sink can stop the run early by
/// returning `ControlFlow::Break`.
pub fn enumerate<F>(params: EnumParams<'_>, sink: F) -> Result<RecursionStats>
where
    F: FnMut(Candidate) -> ControlFlow<()>,
{
    enumerate_observed(params, sink, &mut ())
}

pub fn enumerate_observed<F, O>(
    params: EnumParams<'_>,
    sink: F,
    observer: &mut O,
) -> Result<RecursionStats>
where
    F: FnMut(Candidate) -> ControlFlow<()>,
    O: Observer + ?Sized,
{
    params.validate()?;
    let mut run = Run {
        original: params.graph,
        family: params.family,
        sink,
        observer,
        stats: RecursionStats::default(),
    };
    // a break from the sink just ends the run early
    let _ = run.node(params.graph, params.s, params.t, params.k, 0)?;
    Ok(run.stats)
}

/// Collects the whole stream.
pub fn enumerate_all(params: EnumParams<'_>) -> Result<(Vec<Candidate>, RecursionStats)> {
    let mut out = Vec::new();
    let stats = enumerate(params, |c| {
        out.push(c);
        ControlFlow::Continue(())
    })?;
    Ok((out, stats))
}

struct Run<'a, F, O: ?Sized> {
    original: &'a Graph,
    family: &'a ForbiddenFamily,
    sink: F,
    observer: &'a mut O,
    stats: RecursionStats,
}

impl<F, O> Run<'_, F, O>
where
    F: FnMut(Candidate) -> ControlFlow<()>,
    O: Observer + ?Sized,
{
    fn node(
        &mut self,
        g: &Graph,
        s: &VertexSet,
        t: &VertexSet,
        k: usize,
        depth: usize,
    ) -> Result<ControlFlow<()>> {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let analysis = analyze(g, s, t, k)?;
        let view = NodeView {
            depth,
            params: EnumParams::new(g, s, t, k, self.family),
            lambda: analysis.lambda(),
        };
        self.observer.enter(&view);
        let mut children = 0;
        let outcome = self.branch(g, s, t, k, depth, analysis, &mut children);
        if children == 0 {
            self.stats.leaves += 1;
        }
        let (step, flow) = outcome?;
        self.observer.leave(depth, step);
        Ok(flow)
    }

    #[allow(clippy::too_many_arguments)]
    fn branch(
        &mut self,
        g: &Graph,
        s: &VertexSet,
        t: &VertexSet,
        k: usize,
        depth: usize,
        analysis: SeparatorAnalysis,
        children: &mut usize,
    ) -> Result<(Step, ControlFlow<()>)> {
        let proceed = ControlFlow::Continue(());
        // Step 1
        let SeparatorAnalysis::Finite(cut) = analysis else {
            return Ok((Step::Pruned, proceed));
        };
        let root = s.first().expect("S is non-empty");
        let component = g.reachable(&VertexSet::singleton(root), &VertexSet::new())?;
        if !s.is_subset(&component) || !is_family_free(g, s, self.family) {
            return Ok((Step::Pruned, proceed));
        }

        // Step 2
        if component.is_disjoint(t) && is_family_free(g, &component, self.family) {
            let candidate = Candidate::new(self.original, component)?;
            self.stats.emitted += 1;
            return Ok((Step::Reported, (self.sink)(candidate)));
        }

        let mut child = |run: &mut Self, g: &Graph, s: &VertexSet, t: &VertexSet, k: usize| {
            *children += 1;
            run.node(g, s, t, k, depth + 1)
        };

        // Step 3
        if let Some(u) = find_step3_enrichment(g, s, t, self.family) {
            // a child with budget k - 1 < 0 would stop at step 1 right away
            if k > 0 {
                for x in &u {
                    let reduced = g.delete_vertex(x)?;
                    if child(self, &reduced, s, t, k - 1)?.is_break() {
                        return Ok((Step::AttachedEnrichment, ControlFlow::Break(())));
                    }
                }
            }
            let flow = child(self, g, &s.union(&u), t, k)?;
            return Ok((Step::AttachedEnrichment, flow));
        }

        // Step 4
        let (enrichments, support) = connected_enrichment_support(g, s, t, self.family);
        if let Some(v) = find_increasing_vertex(&support, &cut) {
            let u = enrichments
                .iter()
                .find(|u| u.contains(v))
                .ok_or(Error::Internal(
                    "increasing vertex outside every enrichment",
                ))?;
            if k > 0 {
                for x in u {
                    let reduced = g.delete_vertex(x)?;
                    if child(self, &reduced, s, t, k - 1)?.is_break() {
                        return Ok((Step::SeparatorIncrease, ControlFlow::Break(())));
                    }
                }
            }
            if child(self, g, &s.union(u), t, k)?.is_break() {
                return Ok((Step::SeparatorIncrease, ControlFlow::Break(())));
            }
            let flow = child(self, g, s, &t.union(u), k)?;
            return Ok((Step::SeparatorIncrease, flow));
        }

        let extended = t.union(&support);
        let push = analyze(g, s, &extended, k)?
            .into_extremal()
            .filter(|e| e.lambda == cut.lambda)
            .ok_or(Error::Internal(
                "enrichment support changed the separator size",
            ))?;
        let p = choose_pivot(&push.farthest)?;
        let grown = push.reach_farthest;
        if k > 0 {
            let reduced = g.delete_vertex(p)?;
            if child(self, &reduced, &grown, &t.without(p), k - 1)?.is_break() {
                return Ok((Step::FarthestPush, ControlFlow::Break(())));
            }
        }
        if !t.contains(p) {
            let flow = child(self, g, &grown.with(p), t, k)?;
            return Ok((Step::FarthestPush, flow));
        }
        Ok((Step::FarthestPush, proceed))
    }
}

/// Pivot of the farthest-separator branch: the smallest vertex of `p_set`.
pub fn choose_pivot(p_set: &VertexSet) -> Result<Vertex> {
    p_set
        .first()
        .ok_or(Error::Internal("farthest separator is empty"))
}

/// Keeps the candidates that no other candidate beats: a candidate is
/// dropped when some other one strictly contains it without a larger
/// neighborhood. Output is deduplicated and sorted by member set.
pub fn filter_seclusion_maximal(cands: &[Candidate]) -> Vec<Candidate> {
    let unique: BTreeMap<&VertexSet, &Candidate> = cands.iter().map(|c| (&c.members, c)).collect();
    unique
        .values()
        .filter(|c| {
            !unique.values().any(|other| {
                other.members.len() > c.members.len()
                    && c.members.is_subset(&other.members)
                    && other.boundary_size <= c.boundary_size
            })
        })
        .map(|c| (*c).clone())
        .collect()
}

/// Progress measure `k + (k - λ(S, T)) + (g(V(G)) - g(S))`, where `g` counts
/// the partials present. `None` when `λ(S, T) > k`.
pub fn measure(params: EnumParams<'_>) -> Result<Option<usize>> {
    params.validate()?;
    let Some(lambda) = analyze(params.graph, params.s, params.t, params.k)?
        .lambda()
        .finite()
    else {
        return Ok(None);
    };
    let everything = params.graph.vertex_set();
    let whole = count_present_partials(params.graph, &everything, params.family);
    let inside = count_present_partials(params.graph, params.s, params.family);
    Ok(Some(params.k + (params.k - lambda) + (whole - inside)))
}
