//! Corpus generators and brute-force oracles shared by the integration tests.
//!
//! The oracles here deliberately avoid the library's own enumeration and
//! quotient code: they work on plain vectors and sorted lists.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use hypergraphic::{Hypergraph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every vertex set of size at least 2 in `{1..n}`, as sorted lists.
pub fn possible_edges(n: usize) -> Vec<Vec<u32>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() >= 2)
        .map(|m| (1..=n as u32).filter(|v| m >> (v - 1) & 1 == 1).collect())
        .collect()
}

fn from_mask(n: usize, all: &[Vec<u32>], mask: u128) -> Hypergraph {
    let edges: Vec<Vec<u32>> = all
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e.clone())
        .collect();
    Hypergraph::new(n, &edges).unwrap()
}

/// All `2^11 = 2048` hypergraphs on 4 vertices.
pub fn all_on_four() -> Vec<Hypergraph> {
    let all = possible_edges(4);
    assert_eq!(all.len(), 11);
    (0u128..1 << all.len()).map(|m| from_mask(4, &all, m)).collect()
}

/// `count` hypergraphs on `n` vertices, each possible edge kept with probability 1/2.
pub fn random_hypergraphs(n: usize, count: usize, seed: u64) -> Vec<Hypergraph> {
    let all = possible_edges(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let edges: Vec<Vec<u32>> = all.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
            Hypergraph::new(n, &edges).unwrap()
        })
        .collect()
}

/// The acceptance corpus: all of n = 4, then 100 random each at n = 5 and n = 6.
pub fn corpus() -> Vec<Hypergraph> {
    let mut c = all_on_four();
    c.extend(random_hypergraphs(5, 100, 0x5eed_0005));
    c.extend(random_hypergraphs(6, 100, 0x5eed_0006));
    c
}

/// A random hyperforest: every new edge joins vertices from distinct components.
pub fn random_hyperforest(rng: &mut ChaCha8Rng, max_n: usize) -> Hypergraph {
    let n = rng.gen_range(2..=max_n);
    let mut comp: Vec<usize> = (0..n).collect();
    let mut edges = Vec::new();
    let attempts = rng.gen_range(1..=n);
    for _ in 0..attempts {
        let mut reps: Vec<usize> = comp.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if reps.len() < 2 {
            break;
        }
        reps.shuffle(rng);
        let size = rng.gen_range(2..=reps.len().min(4));
        let chosen: Vec<usize> = reps[..size].to_vec();
        let mut edge = Vec::new();
        for &c in &chosen {
            let members: Vec<usize> = (0..n).filter(|&v| comp[v] == c).collect();
            edge.push(*members.choose(rng).unwrap() as u32 + 1);
        }
        let target = chosen[0];
        for c in comp.iter_mut() {
            if chosen.contains(c) {
                *c = target;
            }
        }
        edges.push(edge);
    }
    Hypergraph::new(n, &edges).unwrap()
}

pub fn edge_lists(g: &Hypergraph) -> Vec<Vec<u32>> {
    g.edges().iter().map(|e| e.to_vec()).collect()
}

/// Proper cycle search: a closed walk of length at least 2 through pairwise
/// distinct edges with consecutive vertices distinct.
pub fn has_proper_cycle(g: &Hypergraph) -> bool {
    let edges = edge_lists(g);
    fn walk(edges: &[Vec<u32>], start: u32, at: u32, used: &mut Vec<bool>, steps: usize) -> bool {
        for (i, e) in edges.iter().enumerate() {
            if used[i] || !e.contains(&at) {
                continue;
            }
            used[i] = true;
            for &next in e {
                if next == at {
                    continue;
                }
                if (next == start && steps >= 1) || walk(edges, start, next, used, steps + 1) {
                    used[i] = false;
                    return true;
                }
            }
            used[i] = false;
        }
        false
    }
    (1..=g.n() as u32).any(|v| walk(&edges, v, v, &mut vec![false; edges.len()], 0))
}

/// Set partitions of `{1..n}` as block-label vectors (restricted growth strings).
pub fn set_partition_labels(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn rec(i: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == labels.len() {
            out.push(labels.clone());
            return;
        }
        for l in 0..=max {
            labels[i] = l;
            rec(i + 1, max.max(l + 1), labels, out);
        }
    }
    rec(0, 0, &mut labels, &mut out);
    out
}

/// Set compositions of `{1..n}` as lists of sorted parts.
pub fn set_compositions(n: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    fn rec(rest: Vec<u32>, acc: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for mask in 1u64..1 << rest.len() {
            let (part, left): (Vec<(usize, u32)>, Vec<(usize, u32)>) =
                rest.iter().copied().enumerate().partition(|(i, _)| mask >> i & 1 == 1);
            acc.push(part.into_iter().map(|x| x.1).collect());
            rec(left.into_iter().map(|x| x.1).collect(), acc, out);
            acc.pop();
        }
    }
    rec((1..=n as u32).collect(), &mut Vec::new(), &mut out);
    out
}

/// Flats as sorted edge-index lists: edges inside one block of some set partition.
pub fn oracle_flats(g: &Hypergraph) -> BTreeSet<Vec<usize>> {
    let edges = edge_lists(g);
    set_partition_labels(g.n())
        .into_iter()
        .map(|labels| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.iter().all(|&v| labels[v as usize - 1] == labels[e[0] as usize - 1]))
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

/// `Σ_A (-1)^ℓ(A)` accumulated on `G|_A`, keyed by sorted edge-index lists.
pub fn oracle_takeuchi(g: &Hypergraph) -> Vec<(Vec<usize>, i64)> {
    let edges = edge_lists(g);
    let mut sums: std::collections::BTreeMap<Vec<usize>, i64> =
        oracle_flats(g).into_iter().map(|f| (f, 0)).collect();
    for comp in set_compositions(g.n()) {
        let flat: Vec<usize> = edges
            .iter()
            .enumerate()
            .filter(|(_, e)| comp.iter().any(|p| e.iter().all(|v| p.contains(v))))
            .map(|(i, _)| i)
            .collect();
        *sums.get_mut(&flat).unwrap() += if comp.len() % 2 == 0 { 1 } else { -1 };
    }
    sums.into_iter().collect()
}

/// `G/F` on block labels `0..b`: the block count and the distinct non-flat edge images.
pub fn oracle_contract(g: &Hypergraph, flat: &[usize]) -> (usize, Vec<Vec<usize>>) {
    let n = g.n();
    let edges = edge_lists(g);
    let mut label: Vec<usize> = (0..n).collect();
    for &i in flat {
        let m = edges[i].iter().map(|&v| label[v as usize - 1]).min().unwrap();
        for &v in &edges[i] {
            let old = label[v as usize - 1];
            if old != m {
                for l in label.iter_mut() {
                    if *l == old {
                        *l = m;
                    }
                }
            }
        }
    }
    let roots: Vec<usize> = label.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let block = |v: u32| roots.iter().position(|&r| r == label[v as usize - 1]).unwrap();
    let images: BTreeSet<Vec<usize>> = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| !flat.contains(i))
        .map(|(_, e)| e.iter().map(|&v| block(v)).collect::<BTreeSet<_>>().into_iter().collect())
        .collect();
    (roots.len(), images.into_iter().collect())
}

pub fn orientation_product(edges: &[Vec<u32>]) -> u128 {
    edges
        .iter()
        .fold(1u128, |acc, e| acc.saturating_mul((1u128 << e.len()) - 2))
}

/// Acyclic orientations of a hypergraph on nodes `0..nodes`, each reported by its
/// block count. Heads are glued transitively; a cycle or an edge with head and
/// tail in one block rejects the orientation.
pub fn oracle_acyclic_block_counts(nodes: usize, edges: &[Vec<usize>]) -> Vec<usize> {
    let choices: Vec<Vec<Vec<usize>>> = edges
        .iter()
        .map(|e| {
            (1u64..(1 << e.len()) - 1)
                .map(|m| e.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v).collect())
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut cursor = vec![0usize; edges.len()];
    loop {
        let heads: Vec<&Vec<usize>> = cursor.iter().zip(&choices).map(|(&c, ch)| &ch[c]).collect();
        if let Some(blocks) = acyclic_blocks(nodes, edges, &heads) {
            out.push(blocks);
        }
        let mut k = cursor.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cursor[k] += 1;
            if cursor[k] < choices[k].len() {
                break;
            }
            cursor[k] = 0;
        }
    }
}

fn acyclic_blocks(nodes: usize, edges: &[Vec<usize>], heads: &[&Vec<usize>]) -> Option<usize> {
    let mut label: Vec<usize> = (0..nodes).collect();
    loop {
        let mut changed = false;
        for h in heads {
            let m = h.iter().map(|&v| label[v]).min().unwrap();
            for &v in h.iter() {
                let old = label[v];
                if old != m {
                    for l in label.iter_mut() {
                        if *l == old {
                            *l = m;
                        }
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut arcs: HashSet<(usize, usize)> = HashSet::new();
    for (e, h) in edges.iter().zip(heads) {
        let from = label[h[0]];
        for &t in e.iter().filter(|t| !h.contains(t)) {
            if label[t] == from {
                return None;
            }
            arcs.insert((from, label[t]));
        }
    }
    // depth-first search for a directed cycle
    let roots: BTreeSet<usize> = label.iter().copied().collect();
    let mut state = vec![0u8; nodes];
    fn dfs(v: usize, arcs: &HashSet<(usize, usize)>, state: &mut [u8]) -> bool {
        state[v] = 1;
        for &(a, b) in arcs {
            if a == v && (state[b] == 1 || (state[b] == 0 && dfs(b, arcs, state))) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    for &r in &roots {
        if state[r] == 0 && dfs(r, &arcs, &mut state) {
            return None;
        }
    }
    Some(roots.len())
}

/// Classical acyclic orientations of a simple graph: each edge directed one way, no directed cycle.
pub fn graph_acyclic_orientations(n: usize, edges: &[(u32, u32)]) -> u64 {
    let mut count = 0;
    for mask in 0u64..1 << edges.len() {
        let arcs: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| {
                if mask >> i & 1 == 0 {
                    (a as usize - 1, b as usize - 1)
                } else {
                    (b as usize - 1, a as usize - 1)
                }
            })
            .collect();
        let mut indeg = vec![0; n];
        for &(_, b) in &arcs {
            indeg[b] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for &(a, b) in &arcs {
                if a == v {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        ready.push(b);
                    }
                }
            }
        }
        if seen == n {
            count += 1;
        }
    }
    count
}

pub fn vset(v: &[u32]) -> VertexSet {
    v.iter().collect()
}
