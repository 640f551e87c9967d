//! Brute-force reference implementations shared by the integration tests.
//! Everything here works straight from the definitions on mate arrays.
#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use springer_sing::{Arc, LinkPattern};

/// A random pattern on at most `max_n` points.
pub fn arb_pattern(max_n: usize) -> impl Strategy<Value = LinkPattern> {
    (0..=max_n)
        .prop_flat_map(|n| (Just((1..=n).collect::<Vec<_>>()).prop_shuffle(), 0..=n / 2))
        .prop_map(|(points, k)| {
            let n = points.len();
            let arcs: Vec<(usize, usize)> = points[..2 * k].chunks(2).map(|c| (c[0], c[1])).collect();
            LinkPattern::new(n, arcs).unwrap()
        })
}

/// A random maximal pattern on at most `max_n` points.
pub fn arb_maximal(max_n: usize) -> impl Strategy<Value = LinkPattern> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), 0..=n / 2))
        .prop_flat_map(|(n, k)| {
            let all: Vec<LinkPattern> = LinkPattern::enumerate(n, k, true).unwrap().collect();
            proptest::sample::select(all)
        })
}

pub fn all_of(n: usize, k: usize) -> Vec<LinkPattern> {
    LinkPattern::enumerate(n, k, false).unwrap().collect()
}

pub fn maximal_upto(n_max: usize) -> Vec<LinkPattern> {
    (1..=n_max)
        .flat_map(|n| (0..=n / 2).map(move |k| (n, k)))
        .flat_map(|(n, k)| LinkPattern::enumerate(n, k, true).unwrap())
        .collect()
}

/// `r[i][j]` = number of arcs inside `[i,j]`.
#[allow(clippy::needless_range_loop)]
pub fn naive_rank(s: &LinkPattern) -> Vec<Vec<usize>> {
    let n = s.n();
    let mut r = vec![vec![0; n + 2]; n + 2];
    for i in 1..=n {
        for j in i..=n {
            r[i][j] = s.arcs().iter().filter(|a| i <= a.left && a.right <= j).count();
        }
    }
    r
}

pub fn naive_leq(u: &LinkPattern, v: &LinkPattern) -> bool {
    let (ru, rv) = (naive_rank(u), naive_rank(v));
    (1..=u.n()).all(|i| (i..=u.n()).all(|j| ru[i][j] <= rv[i][j]))
}

fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> LinkPattern {
    LinkPattern::new(n, arcs).unwrap()
}

fn without(s: &LinkPattern, drop: &[Arc]) -> Vec<(usize, usize)> {
    s.arcs()
        .iter()
        .filter(|a| !drop.contains(a))
        .map(|a| (a.left, a.right))
        .collect()
}

/// Predecessors grouped by move: an arc over a fixed point is cut at that
/// point (two ways), a crossing is resolved into its two non-crossing
/// rewirings.
pub fn naive_predecessor_pairs(s: &LinkPattern) -> Vec<(LinkPattern, LinkPattern)> {
    let n = s.n();
    let mut out = Vec::new();
    for &a in s.arcs() {
        for x in (a.left + 1..a.right).filter(|&x| s.is_fixed(x)) {
            let rest = without(s, &[a]);
            let mut l = rest.clone();
            l.push((a.left, x));
            let mut r = rest;
            r.push((x, a.right));
            out.push((from_arcs(n, l), from_arcs(n, r)));
        }
    }
    for &a in s.arcs() {
        for &b in s.arcs() {
            if a.left < b.left && b.left < a.right && a.right < b.right {
                let rest = without(s, &[a, b]);
                let mut apart = rest.clone();
                apart.extend([(a.left, b.left), (a.right, b.right)]);
                let mut nested = rest;
                nested.extend([(a.left, b.right), (b.left, a.right)]);
                out.push((from_arcs(n, apart), from_arcs(n, nested)));
            }
        }
    }
    out
}

pub fn naive_predecessors(s: &LinkPattern) -> BTreeSet<LinkPattern> {
    naive_predecessor_pairs(s).into_iter().flat_map(|(a, b)| [a, b]).collect()
}

/// `G_σ` from scratch: vertices `υ ≤ σ`, degree = distinct neighbours
/// through a move in either direction.
pub struct NaiveGraph {
    pub vertices: Vec<LinkPattern>,
    pub degrees: Vec<usize>,
}

pub fn naive_graph(sigma: &LinkPattern) -> NaiveGraph {
    let vertices: Vec<LinkPattern> = all_of(sigma.n(), sigma.k())
        .into_iter()
        .filter(|u| naive_leq(u, sigma))
        .collect();
    let inside: BTreeSet<&LinkPattern> = vertices.iter().collect();
    let degrees = vertices
        .iter()
        .map(|u| {
            let up = naive_predecessors(u).into_iter().filter(|p| inside.contains(p)).count();
            let down = vertices.iter().filter(|w| naive_predecessors(w).contains(u)).count();
            up + down
        })
        .collect();
    NaiveGraph { vertices, degrees }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
