#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::Rng;
use secluded::{ForbiddenFamily, Graph};

/// All connected graphs on `1..=max_n` vertices, one per isomorphism class.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut layer: Vec<Vec<u32>> = vec![vec![0]];
    let mut out = vec![to_graph(&layer[0])];
    for n in 2..=max_n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for adj in &layer {
            for hood in 1u32..(1 << (n - 1)) {
                let mut grown = adj.clone();
                for (v, row) in grown.iter_mut().enumerate() {
                    if hood >> v & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                grown.push(hood);
                if seen.insert(canonical(&grown)) {
                    next.push(grown);
                }
            }
        }
        out.extend(next.iter().map(|a| to_graph(a)));
        layer = next;
    }
    out
}

fn to_graph(adj: &[u32]) -> Graph {
    let n = adj.len();
    let edges = (0..n)
        .tuple_combinations()
        .filter(|&(u, v)| adj[u] >> v & 1 == 1);
    Graph::from_edges(0..n, edges).unwrap()
}

/// Smallest upper-triangle code over orderings that keep vertices sorted by
/// an isomorphism-invariant key.
fn canonical(adj: &[u32]) -> u64 {
    let n = adj.len();
    let deg = |v: usize| adj[v].count_ones();
    let key = |v: usize| {
        let mut around: Vec<u32> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(deg).collect();
        around.sort();
        (deg(v), around)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| key(v));
    let groups: Vec<Vec<usize>> = order
        .iter()
        .chunk_by(|&&v| key(v))
        .into_iter()
        .map(|(_, g)| g.copied().collect())
        .collect();
    groups
        .iter()
        .map(|g| g.iter().copied().permutations(g.len()).collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(|parts| {
            let ord: Vec<usize> = parts.concat();
            (0..n).tuple_combinations().fold(0u64, |code, (i, j)| {
                code << 1 | u64::from(adj[ord[i]] >> ord[j] & 1)
            })
        })
        .min()
        .unwrap_or(0)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .tuple_combinations()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(0..n, edges).unwrap()
}

pub fn two_k2() -> Graph {
    Graph::path(2).disjoint_union(&Graph::path(2))
}

/// The five families of the enumeration sweep, with display names.
pub fn sweep_families() -> Vec<(&'static str, ForbiddenFamily)> {
    let one = |g: Graph| ForbiddenFamily::new(&[g]).unwrap();
    vec![
        ("empty", ForbiddenFamily::empty()),
        ("K3", one(Graph::complete(3))),
        ("P3", one(Graph::path(3))),
        ("K1,3", one(Graph::star(3))),
        ("2K2", one(two_k2())),
    ]
}
