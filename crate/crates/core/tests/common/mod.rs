//! Shared helpers for the integration suites: a seeded random layered
//! graph builder and independent brute-force oracles that never touch the
//! code paths they are used to verify.

// Each test target compiles its own copy; not every target uses every helper.
#![allow(dead_code)]

use std::collections::BTreeSet;

use layered_hilbert::graph::{Edge, LayeredGraph, Vertex};
use rand::seq::index::sample;
use rand::Rng;

/// Builds a random valid layered graph: level sizes within the vertex
/// budget, at least one out-edge per positive vertex, occasional parallel
/// edges.
pub fn random_layered_graph(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_top_level: u32,
) -> LayeredGraph {
    let requested_top = rng.gen_range(0..=max_top_level);
    let mut sizes = vec![1usize];
    let mut total = 1;
    for _ in 1..=requested_top {
        let remaining = max_vertices.saturating_sub(total);
        if remaining == 0 {
            break;
        }
        let s = rng.gen_range(1..=remaining.min(6));
        sizes.push(s);
        total += s;
    }
    let id_at = |level: usize, j: usize| format!("L{level}N{j}");
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (level, &count) in sizes.iter().enumerate() {
        for j in 0..count {
            vertices.push(Vertex {
                id: id_at(level, j),
                level: level as u32,
            });
            if level > 0 {
                let below = sizes[level - 1];
                let fanout = rng.gen_range(1..=below.min(3));
                let picks = sample(rng, below, fanout);
                for head in picks {
                    edges.push(Edge {
                        tail: id_at(level, j),
                        head: id_at(level - 1, head),
                    });
                    if rng.gen_bool(0.15) {
                        edges.push(Edge {
                            tail: id_at(level, j),
                            head: id_at(level - 1, head),
                        });
                    }
                }
            }
        }
    }
    LayeredGraph::validate(None, vertices, edges).expect("random graph construction is valid")
}

/// Signed chain enumeration straight from a strict-order matrix, the
/// denominator re-derived from first principles:
/// `D = 1 + sum over chains (-1)^len t^(lvl(first) - lvl(last) + 1)`.
pub fn chain_denominator_naive(levels: &[u32], gt: &[Vec<bool>]) -> Vec<i64> {
    let top = levels.iter().copied().max().unwrap_or(0) as usize;
    let mut coeffs = vec![0i64; top + 2];
    coeffs[0] = 1;

    fn rec(
        start: usize,
        current: usize,
        len: usize,
        levels: &[u32],
        gt: &[Vec<bool>],
        coeffs: &mut [i64],
    ) {
        let e = (levels[start] - levels[current]) as usize + 1;
        coeffs[e] += if len % 2 == 1 { -1 } else { 1 };
        for (next, &wins) in gt[current].iter().enumerate() {
            if wins {
                rec(start, next, len + 1, levels, gt, coeffs);
            }
        }
    }

    for v in 0..levels.len() {
        rec(v, v, 1, levels, gt, &mut coeffs);
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    coeffs
}

/// A subspace represented extensionally, as the set of all its points.
pub type PointSet = BTreeSet<Vec<u64>>;

fn all_vectors(n: usize, q: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![0u64; n]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..q).map(move |c| {
                    let mut w = v.clone();
                    w.remove(0);
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

fn span_of(gens: &[&Vec<u64>], n: usize, q: u64) -> PointSet {
    let mut points = PointSet::new();
    let mut coeffs = vec![0u64; gens.len()];
    loop {
        let mut point = vec![0u64; n];
        for (c, g) in coeffs.iter().zip(gens) {
            for (p, x) in point.iter_mut().zip(g.iter()) {
                *p = (*p + c * x) % q;
            }
        }
        points.insert(point);
        let mut i = 0;
        while i < coeffs.len() {
            coeffs[i] += 1;
            if coeffs[i] < q {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        if i == coeffs.len() {
            return points;
        }
    }
}

/// Every subspace of F_q^n of dimension at most `gens`, found by brute
/// force: take the span of every `gens`-tuple of vectors and deduplicate
/// the resulting point sets.
pub fn brute_force_spans(n: usize, q: u64, gens: usize) -> BTreeSet<PointSet> {
    let vectors = all_vectors(n, q);
    let mut spans = BTreeSet::new();
    let mut idx = vec![0usize; gens];
    loop {
        let tuple: Vec<&Vec<u64>> = idx.iter().map(|&i| &vectors[i]).collect();
        spans.insert(span_of(&tuple, n, q));
        let mut i = 0;
        while i < idx.len() {
            idx[i] += 1;
            if idx[i] < vectors.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
        if i == idx.len() {
            return spans;
        }
    }
}

/// Number of m-dimensional subspaces of F_q^n, counted extensionally.
pub fn count_subspaces_of_dim(n: usize, m: usize, q: u64) -> usize {
    let target = (q as u128).pow(m as u32);
    brute_force_spans(n, q, m)
        .iter()
        .filter(|s| s.len() as u128 == target)
        .count()
}
