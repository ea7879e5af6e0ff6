//! Brute-force reference implementations.
//!
//! Everything here evaluates definitions directly over all vertex subsets,
//! encoded as bitmasks, and never calls into the flow, enumeration or solver
//! code. Pattern containment is decided by trying every vertex subset of the
//! right size under every bijection. Only usable on graphs with at most
//! [`MAX_ORDER`] vertices.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::separators::Lambda;
use crate::solvers::{ScatteredInstance, WeightedInstance};
use crate::subiso::ForbiddenFamily;

pub const MAX_ORDER: usize = 20;

/// Bitmask view of a small graph; bit `i` stands for the `i`-th smallest id.
struct Dense {
    ids: Vec<Vertex>,
    adj: Vec<u32>,
}

impl Dense {
    fn new(g: &Graph) -> Result<Self> {
        if g.order() > MAX_ORDER {
            return Err(Error::invalid(format!(
                "brute force is limited to {MAX_ORDER} vertices, got {}",
                g.order()
            )));
        }
        let ids: Vec<Vertex> = g.vertices().collect();
        let adj = ids
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .map(|u| 1u32 << ids.binary_search(u).expect("neighbor present"))
                    .fold(0, |a, b| a | b)
            })
            .collect();
        Ok(Self { ids, adj })
    }

    fn n(&self) -> usize {
        self.ids.len()
    }

    fn full(&self) -> u32 {
        ((1u64 << self.n()) - 1) as u32
    }

    fn mask_of(&self, set: &VertexSet) -> Result<u32> {
        set.iter().try_fold(0u32, |acc, v| {
            let i = self
                .ids
                .binary_search(&v)
                .map_err(|_| Error::UnknownVertex(v))?;
            Ok(acc | 1 << i)
        })
    }

    fn set_of(&self, mask: u32) -> VertexSet {
        bits(mask).map(|i| self.ids[i]).collect()
    }

    fn neighborhood(&self, mask: u32) -> u32 {
        bits(mask).fold(0, |acc, i| acc | self.adj[i]) & !mask
    }

    /// Vertices reachable from `from` inside `within`.
    fn reach(&self, from: u32, within: u32) -> u32 {
        let mut seen = from & within;
        let mut frontier = seen;
        while frontier != 0 {
            let next = self.neighborhood(frontier) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn connected(&self, mask: u32) -> bool {
        mask != 0 && self.reach(mask & mask.wrapping_neg(), mask) == mask
    }

    /// Connected components of `G[mask]`.
    fn components(&self, mut mask: u32) -> Vec<u32> {
        let mut out = Vec::new();
        while mask != 0 {
            let comp = self.reach(mask & mask.wrapping_neg(), mask);
            out.push(comp);
            mask &= !comp;
        }
        out
    }

    fn induces(&self, pattern: &Graph, image: &[usize]) -> bool {
        (0..image.len())
            .tuple_combinations()
            .all(|(a, b)| pattern.has_edge(a, b) == (self.adj[image[a]] >> image[b] & 1 == 1))
    }

    /// `free[m]` tells whether `G[m]` avoids every pattern of the family.
    fn free_table(&self, family: &ForbiddenFamily) -> Vec<bool> {
        let size = 1usize << self.n();
        let mut hit = vec![false; size];
        for pattern in family.patterns() {
            let p = &pattern.graph().compacted();
            if p.order() > self.n() {
                continue;
            }
            for chosen in (0..self.n()).combinations(p.order()) {
                let mask = chosen.iter().fold(0usize, |a, &i| a | 1 << i);
                if hit[mask] {
                    continue;
                }
                let found = chosen
                    .iter()
                    .copied()
                    .permutations(p.order())
                    .any(|image| self.induces(p, &image));
                hit[mask] = found;
            }
        }
        // a set contains a pattern iff it or one of its one-smaller subsets does
        for m in 1..size {
            if !hit[m] {
                hit[m] = bits(m as u32).any(|i| hit[m & !(1 << i)]);
            }
        }
        hit.into_iter().map(|h| !h).collect()
    }
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

/// All seclusion-maximal sets `C` with `s ⊆ C ⊆ V \ t`, `G[C]` connected and
/// free of the family, and `|N(C)| ≤ k`; sorted.
pub fn brute_enum(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    k: usize,
    family: &ForbiddenFamily,
) -> Result<Vec<VertexSet>> {
    let d = Dense::new(g)?;
    if s.is_empty() {
        return Err(Error::invalid("S must be non-empty"));
    }
    let sm = d.mask_of(s)?;
    let tm = d.mask_of(t)?;
    if sm & tm != 0 {
        return Ok(Vec::new());
    }
    let free = d.free_table(family);
    let full = d.full();
    // boundary size of every admissible set, u32::MAX for the others
    let boundary: Vec<u32> = (0..=full)
        .map(|m| {
            let ok = m & sm == sm && m & tm == 0 && d.connected(m) && free[m as usize];
            if ok {
                d.neighborhood(m).count_ones()
            } else {
                u32::MAX
            }
        })
        .collect();
    let mut out = Vec::new();
    for m in 0..=full {
        let own = boundary[m as usize];
        if own as usize > k {
            continue;
        }
        let mut sup = m;
        let mut beaten = false;
        while sup != full {
            sup = (sup + 1) | m;
            if boundary[sup as usize] <= own {
                beaten = true;
                break;
            }
        }
        if !beaten {
            out.push(d.set_of(m));
        }
    }
    out.sort();
    Ok(out)
}

/// `λ(s, t)` by scanning subsets of `V \ s` by size, plus every minimum
/// left-restricted separator (sorted).
pub fn brute_min_separators(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
) -> Result<(Lambda, Vec<VertexSet>)> {
    let d = Dense::new(g)?;
    if s.is_empty() {
        return Err(Error::invalid("S must be non-empty"));
    }
    let sm = d.mask_of(s)?;
    let tm = d.mask_of(t)?;
    if sm & tm != 0 {
        return Ok((Lambda::Infinite, Vec::new()));
    }
    let full = d.full();
    let mut best = u32::MAX;
    let mut found = Vec::new();
    for p in 0..=full {
        if p & sm != 0 || p.count_ones() > best {
            continue;
        }
        let rest = full & !p;
        if d.reach(sm, rest) & tm & rest != 0 {
            continue;
        }
        if p.count_ones() < best {
            best = p.count_ones();
            found.clear();
        }
        found.push(d.set_of(p));
    }
    found.sort();
    Ok((Lambda::Finite(best as usize), found))
}

/// Heaviest connected family-free set with at most `k` neighbors; ties to
/// the lexicographically smallest set.
pub fn brute_max_weight(inst: &WeightedInstance) -> Result<Option<(VertexSet, u64)>> {
    let d = Dense::new(&inst.graph)?;
    let free = d.free_table(&inst.family);
    let mut best: Option<(VertexSet, u64)> = None;
    for m in 1..=d.full() {
        if !free[m as usize] || !d.connected(m) || d.neighborhood(m).count_ones() as usize > inst.k
        {
            continue;
        }
        let set = d.set_of(m);
        let w = inst.weight_of(&set)?;
        let better = match &best {
            None => true,
            Some((b, bw)) => w > *bw || (w == *bw && set < *b),
        };
        if better {
            best = Some((set, w));
        }
    }
    Ok(best)
}

/// Smallest deletion set (then lexicographically first) of size at most `k`.
pub fn brute_scattered(inst: &ScatteredInstance) -> Result<Option<VertexSet>> {
    let d = Dense::new(&inst.graph)?;
    let tables: Vec<Vec<bool>> = inst.families.iter().map(|f| d.free_table(f)).collect();
    let full = d.full();
    for size in 0..=inst.k.min(d.n()) {
        for chosen in (0..d.n()).combinations(size) {
            let x = chosen.iter().fold(0u32, |a, &i| a | 1 << i);
            let ok = d
                .components(full & !x)
                .into_iter()
                .all(|c| tables.iter().any(|free| free[c as usize]));
            if ok {
                return Ok(Some(d.set_of(x)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(g: Graph) -> ForbiddenFamily {
        ForbiddenFamily::new(&[g]).unwrap()
    }

    #[test]
    fn enum_examples() {
        let claw = Graph::star(3);
        let got = brute_enum(
            &claw,
            &[0].into(),
            &VertexSet::new(),
            1,
            &fam(Graph::star(3)),
        )
        .unwrap();
        assert_eq!(
            got,
            vec![[0, 1, 2].into(), [0, 1, 3].into(), [0, 2, 3].into()]
        );

        let p = Graph::path(3);
        let got = brute_enum(
            &p,
            &[0].into(),
            &VertexSet::new(),
            0,
            &ForbiddenFamily::empty(),
        )
        .unwrap();
        assert_eq!(got, vec![[0, 1, 2].into()]);

        assert!(
            brute_enum(&p, &[0].into(), &[0].into(), 2, &ForbiddenFamily::empty())
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn separator_examples() {
        let p = Graph::path(5);
        let (l, seps) = brute_min_separators(&p, &[0].into(), &[4].into()).unwrap();
        assert_eq!(l, Lambda::Finite(1));
        assert_eq!(seps, vec![[1].into(), [2].into(), [3].into(), [4].into()]);

        let two = Graph::from_edges(0..4, [(0, 1), (2, 3)]).unwrap();
        let (l, seps) = brute_min_separators(&two, &[0].into(), &[3].into()).unwrap();
        assert_eq!(l, Lambda::Finite(0));
        assert_eq!(seps, vec![VertexSet::new()]);

        let (l, seps) = brute_min_separators(&p, &[0].into(), &[0].into()).unwrap();
        assert_eq!(l, Lambda::Infinite);
        assert!(seps.is_empty());
    }

    #[test]
    fn max_weight_examples() {
        let single = Graph::from_edges([0], []).unwrap();
        let inst = WeightedInstance::unit(single, 0, fam(Graph::complete(3)));
        assert_eq!(brute_max_weight(&inst).unwrap(), Some(([0].into(), 1)));

        let inst = WeightedInstance::unit(Graph::star(3), 1, fam(Graph::star(3)));
        assert_eq!(
            brute_max_weight(&inst).unwrap(),
            Some(([0, 1, 2].into(), 3))
        );

        let inst = WeightedInstance::unit(Graph::complete(3), 0, fam(Graph::complete(3)));
        assert_eq!(brute_max_weight(&inst).unwrap(), None);
    }

    #[test]
    fn scattered_examples() {
        let k3 = || fam(Graph::complete(3));
        let inst = ScatteredInstance::new(Graph::complete(3), 1, vec![k3()]).unwrap();
        assert_eq!(brute_scattered(&inst).unwrap(), Some([0].into()));

        let g = Graph::complete(3).disjoint_union(&Graph::star(3));
        let inst = ScatteredInstance::new(g, 0, vec![k3(), fam(Graph::star(3))]).unwrap();
        assert_eq!(brute_scattered(&inst).unwrap(), Some(VertexSet::new()));

        let inst = ScatteredInstance::new(Graph::complete(3), 0, vec![k3()]).unwrap();
        assert_eq!(brute_scattered(&inst).unwrap(), None);
    }

    #[test]
    fn size_guard() {
        let big = Graph::path(MAX_ORDER + 1);
        assert!(brute_enum(
            &big,
            &[0].into(),
            &VertexSet::new(),
            1,
            &ForbiddenFamily::empty()
        )
        .is_err());
    }
}
