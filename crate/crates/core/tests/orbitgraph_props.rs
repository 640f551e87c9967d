use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use rayon::prelude::*;
use springer_sing::orbitgraph::{dim, predecessor_pairs, GeometryNumbers};
use springer_sing::{predecessors, successors, LinkPattern, OrbitGraph, Oracle};

mod common;
use common::{all_of, arb_pattern, binomial, maximal_upto, naive_graph, naive_predecessor_pairs};

fn everything(n_max: usize) -> Vec<LinkPattern> {
    (0..=n_max)
        .flat_map(|n| (0..=n / 2).map(move |k| (n, k)))
        .flat_map(|(n, k)| all_of(n, k))
        .collect()
}

fn unordered(p: &(LinkPattern, LinkPattern)) -> (LinkPattern, LinkPattern) {
    if p.0 <= p.1 {
        p.clone()
    } else {
        (p.1.clone(), p.0.clone())
    }
}

proptest! {
    #[test]
    fn predecessor_count_is_twice_defect(s in arb_pattern(14)) {
        prop_assert_eq!(predecessors(&s).len(), 2 * s.defect());
    }

    #[test]
    fn moves_match_reference(s in arb_pattern(12)) {
        let ours: BTreeSet<_> = predecessor_pairs(&s).iter().map(unordered).collect();
        let reference: BTreeSet<_> = naive_predecessor_pairs(&s).iter().map(unordered).collect();
        prop_assert_eq!(ours, reference);
    }

    #[test]
    fn predecessors_are_strictly_greater(s in arb_pattern(12)) {
        for p in predecessors(&s) {
            prop_assert!(s.lt(&p).unwrap(), "{} !< {}", s, p);
            prop_assert!(p.defect() < s.defect());
            prop_assert_eq!(p.k(), s.k());
        }
    }
}

#[test]
fn successors_invert_predecessors() {
    for n in 0..=7 {
        for k in 0..=n / 2 {
            let all = all_of(n, k);
            for u in &all {
                let expect: Vec<LinkPattern> =
                    all.iter().filter(|w| predecessors(w).contains(u)).cloned().collect();
                assert_eq!(successors(u), expect, "{u}");
            }
        }
    }
}

#[test]
fn successor_count_is_dimension_above_minimum() {
    everything(10).par_iter().for_each(|u| {
        let g = GeometryNumbers::of(u);
        assert_eq!(successors(u).len(), g.p(u.defect()), "{u}");
    });
}

#[test]
fn graph_matches_reference() {
    let oracle = Oracle::new(7);
    for s in everything(7) {
        let g = oracle.graph(&s).unwrap();
        let naive = naive_graph(&s);
        let ours: Vec<LinkPattern> = g.vertices().to_vec();
        assert_eq!(
            ours.iter().collect::<BTreeSet<_>>(),
            naive.vertices.iter().collect::<BTreeSet<_>>(),
            "{s}"
        );
        for (u, d) in naive.vertices.iter().zip(&naive.degrees) {
            assert_eq!(g.degree(u).unwrap(), *d, "{u} in G({s})");
        }
    }
}

#[test]
fn degrees_bound_below_and_low_codimension_is_smooth() {
    let oracle = Oracle::new(10);
    everything(10).par_iter().for_each(|s| {
        let g = oracle.graph(s).unwrap();
        let p = g.p_sigma();
        assert_eq!(p, dim(s) - g.geometry().d0);
        for v in 0..g.len() {
            assert!(g.degree_at(v) >= p, "degree below p at {} in {s}", g.vertices()[v]);
            if g.codim_at(v) <= 2 {
                assert_eq!(g.degree_at(v), p, "codim {} at {} in {s}", g.codim_at(v), g.vertices()[v]);
            }
        }
        assert_eq!(g.degree(s).unwrap(), p);
    });
}

#[test]
fn covers_are_codimension_one() {
    let oracle = Oracle::new(7);
    for s in everything(7) {
        let g = oracle.graph(&s).unwrap();
        let covers: BTreeSet<LinkPattern> = g.covers().into_iter().collect();
        let below: Vec<&LinkPattern> = g.vertices().iter().filter(|u| *u != &s).collect();
        let reference: BTreeSet<LinkPattern> = below
            .iter()
            .filter(|u| {
                !below.iter().any(|w| w != *u && u.leq(w).unwrap() && w.leq(&s).unwrap())
            })
            .map(|u| (*u).clone())
            .collect();
        assert_eq!(covers, reference, "{s}");
        for u in &covers {
            assert_eq!(g.codim(u).unwrap(), 1);
        }
    }
}

#[test]
fn sibling_pairs_and_singularity() {
    let oracle = Oracle::new(9);
    maximal_upto(9).par_iter().for_each(|s| {
        let g = oracle.graph(s).unwrap();
        let inside: HashSet<&LinkPattern> = g.vertices().iter().collect();
        let singular: HashSet<LinkPattern> = g.singular_set().into_iter().collect();
        for w in g.vertices().iter().filter(|w| *w != s) {
            let pairs = predecessor_pairs(w);
            for (a, b) in &pairs {
                assert!(inside.contains(a) || inside.contains(b), "{w} in G({s}): {a} / {b}");
            }
            let full = pairs.iter().any(|(a, b)| inside.contains(a) && inside.contains(b));
            assert_eq!(full, singular.contains(w), "{w} in G({s})");
        }
    });
}

#[test]
fn worked_example() {
    let s: LinkPattern = "n=6 (2,3)(4,5)".parse().unwrap();
    let g = OrbitGraph::build(&s).unwrap();
    assert_eq!(g.geometry().d0, 2);
    assert_eq!(g.p_sigma(), 5);
    assert_eq!(g.degree(&s).unwrap(), 5);
    let low: LinkPattern = "n=6 (1,5)(2,6)".parse().unwrap();
    assert_eq!(g.degree(&low).unwrap(), 9);
    assert_eq!(g.covers().len(), 5);
    assert_eq!(g.tangent_dim(&low).unwrap(), 11);
}

#[test]
fn concentric_blocks_count() {
    // σ = · con(k1) · con(k2) · ... · with one or more fixed points between
    let oracle = Oracle::new(12);
    let mut seen = 0;
    for m in 2..=4usize {
        let mut stack: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        while let Some(blocks) = stack.pop() {
            let width: usize = blocks.iter().map(|(k, gap)| 2 * k + gap).sum::<usize>() + 1;
            if blocks.len() == m {
                let mut s = LinkPattern::empty(1);
                for (k, gap) in &blocks {
                    s = s.concat(&LinkPattern::concentric(*k)).concat(&LinkPattern::empty(*gap));
                }
                let sing = oracle.sing_components(&s).unwrap();
                assert_eq!(sing.len(), binomial(m, 2), "{s}");
                seen += 1;
                continue;
            }
            for k in 1..=3 {
                for gap in 1..=2 {
                    if width + 2 * k + gap <= 12 {
                        let mut next = blocks.clone();
                        next.push((k, gap));
                        stack.push(next);
                    }
                }
            }
        }
    }
    assert!(seen > 20);
}

#[test]
fn dot_export_is_layered() {
    let s: LinkPattern = "n=6 (2,3)(4,5)".parse().unwrap();
    let g = OrbitGraph::build(&s).unwrap();
    let dot = g.to_dot(None);
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches("rank=same").count(), g.codim(&"n=6 (1,5)(2,6)".parse().unwrap()).unwrap() + 1);
    assert_eq!(dot.matches(", color=red").count(), 2);
    assert_eq!(dot.matches(" -- ").count(), g.edges().len());
    let cut = g.to_dot(Some(1));
    assert!(cut.matches(" -- ").count() < g.edges().len());
}
