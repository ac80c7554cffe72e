//! Brute-force counts and coefficients, written without the library's
//! enumerators, compared against the library.

use std::sync::Arc;

use grhopf::antipode::antipode;
use grhopf::enumerate::{acyclic_orientations, flats, matchings, stable_compositions, stable_partitions};
use grhopf::graph::eval_int_poly;
use grhopf::hopf::{basis, basis_change};
use grhopf::verify::{corpus, graphs_on};
use grhopf::{BasisKey, Element, Graph, Method, MonoidId, QtPoly};

fn edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().into_iter().map(|(a, b)| (a as usize, b as usize)).collect()
}

/// Kahn's algorithm on an explicit arc list.
fn acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0; n];
    for &(_, b) in arcs {
        indeg[b] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &(a, b) in arcs {
            if a == v {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    stack.push(b);
                }
            }
        }
    }
    seen == n
}

fn brute_acyclic_orientations(g: &Graph) -> usize {
    let e = edges(g);
    (0u32..1 << e.len())
        .filter(|mask| {
            let arcs: Vec<_> = e
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (b, a) } else { (a, b) })
                .collect();
            acyclic(g.n(), &arcs)
        })
        .count()
}

fn brute_colorings(g: &Graph, k: usize) -> i64 {
    let n = g.n();
    let e = edges(g);
    let total = k.pow(n as u32);
    (0..total)
        .filter(|&code| {
            let color = |v: usize| code / k.pow(v as u32) % k;
            e.iter().all(|&(a, b)| color(a) != color(b))
        })
        .count() as i64
}

/// Set partitions of `0..n` as restricted growth strings.
fn rgs(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn go(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            if i == 0 && b > 0 {
                break;
            }
            cur[i] = b;
            go(i + 1, max.max(b), cur, out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    go(0, 0, &mut cur, &mut out);
    out
}

fn blocks_of(labels: &[usize]) -> Vec<Vec<usize>> {
    let k = labels.iter().max().map_or(0, |m| m + 1);
    (0..k).map(|b| (0..labels.len()).filter(|&v| labels[v] == b).collect()).collect()
}

fn connected_within(g: &Graph, block: &[usize]) -> bool {
    let mut reached = vec![block[0]];
    let mut frontier = vec![block[0]];
    while let Some(v) = frontier.pop() {
        for &w in block {
            if !reached.contains(&w) && g.adjacent(v, w) {
                reached.push(w);
                frontier.push(w);
            }
        }
    }
    reached.len() == block.len()
}

fn independent(g: &Graph, block: &[usize]) -> bool {
    block.iter().all(|&a| block.iter().all(|&b| !g.adjacent(a, b)))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn corpus_sizes_match_labeled_graph_counts() {
    let mut total = 0;
    for n in 0..=5usize {
        let expected = 1usize << (n * n.saturating_sub(1) / 2);
        assert_eq!(graphs_on(n).len(), expected, "n = {n}");
        total += expected;
        assert_eq!(corpus(n).len(), total);
    }
    assert_eq!(total, 1100);
}

#[test]
fn acyclic_orientations_by_brute_force() {
    for g in corpus(4) {
        let brute = brute_acyclic_orientations(&g);
        assert_eq!(acyclic_orientations(&g, g.vertices()).len(), brute, "{}", g.compact());
        assert_eq!(basis(MonoidId::AO, &g).len(), brute);
    }
}

#[test]
fn chromatic_polynomial_by_counting_colorings() {
    for g in corpus(4) {
        let chi = g.chromatic_polynomial();
        for k in 0..=4 {
            assert_eq!(eval_int_poly(&chi, k as i64), brute_colorings(&g, k), "{} at {k}", g.compact());
        }
    }
}

#[test]
fn partition_families_by_brute_force() {
    for g in corpus(4) {
        let parts = rgs(g.n());
        let connected = parts
            .iter()
            .filter(|p| blocks_of(p).iter().all(|b| connected_within(&g, b)))
            .count();
        let stable: Vec<usize> = parts
            .iter()
            .map(|p| blocks_of(p))
            .filter(|bs| bs.iter().all(|b| independent(&g, b)))
            .map(|bs| bs.len())
            .collect();
        let e = edges(&g);
        let matching_count = (0u32..1 << e.len())
            .filter(|mask| {
                let chosen: Vec<_> = (0..e.len()).filter(|i| mask >> i & 1 == 1).map(|i| e[i]).collect();
                let mut ends: Vec<usize> = chosen.iter().flat_map(|&(a, b)| [a, b]).collect();
                let len = ends.len();
                ends.sort_unstable();
                ends.dedup();
                ends.len() == len
            })
            .count();
        let v = g.vertices();
        assert_eq!(flats(&g, v).len(), connected, "{}", g.compact());
        assert_eq!(stable_partitions(&g, v).len(), stable.len());
        assert_eq!(stable_compositions(&g, v).len(), stable.iter().map(|&k| factorial(k)).sum::<usize>());
        assert_eq!(matchings(&g, v).len(), matching_count);
        assert_eq!(basis(MonoidId::Sigma, &g).len(), [1, 1, 3, 13, 75][g.n()]);
        assert_eq!(basis(MonoidId::PiM, &g).len(), parts.len());
    }
}

/// `p_π = Σ_{τ ≤ π} μ(τ, π) m_τ` with the partition-lattice Möbius function
/// `μ(τ, π) = Π_B (−1)^{k_B − 1} (k_B − 1)!`, `k_B` the number of blocks of
/// `τ` inside the block `B` of `π`.
#[test]
fn partition_basis_change_matches_mobius_formula() {
    for g in corpus(4) {
        let g = Arc::new(g);
        for k in basis(MonoidId::PiP, &g) {
            let pi = k.partition().unwrap().clone();
            let m = basis_change(MonoidId::PiP, MonoidId::PiM, &Element::basis_element(MonoidId::PiP, g.clone(), k))
                .unwrap();
            let bell = [1usize, 1, 2, 5, 15];
            let refinements: usize = pi.blocks().iter().map(|b| bell[b.len()]).product();
            assert_eq!(m.terms().len(), refinements);
            for (tk, c) in m.terms().iter() {
                let tau = tk.partition().unwrap();
                let mut mu = 1i64;
                for &b in pi.blocks() {
                    let inside = tau.blocks().iter().filter(|t| t.is_subset(b)).count();
                    assert!(inside > 0);
                    let sign = if inside % 2 == 1 { 1 } else { -1 };
                    mu *= sign * factorial(inside - 1) as i64;
                }
                assert_eq!(c, &QtPoly::constant(mu), "{} on {}", tk.to_literal(&g), g.compact());
            }
        }
    }
}

/// On `K_n` every pair of vertices is an edge and on `D_n` none is, so the
/// linear-order antipode is `(−1)^n q^{n(n−1)/2}` or `(−1)^n t^{n(n−1)/2}`
/// times the reversed order.
#[test]
fn linear_order_antipode_on_cliques_and_edgeless_graphs() {
    for n in 0..=5 {
        let labels = Graph::numbered_labels(n);
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let pairs = (n * n.saturating_sub(1) / 2) as u32;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        for (g, coeff) in [
            (Graph::complete(&refs).unwrap(), QtPoly::monomial(pairs, 0, sign)),
            (Graph::discrete(&refs).unwrap(), QtPoly::monomial(0, pairs, sign)),
        ] {
            let g = Arc::new(g);
            let order: Vec<u8> = (0..n as u8).collect();
            let x = Element::basis_element(MonoidId::L, g.clone(), BasisKey::LinearOrder(order.clone()));
            let rev = BasisKey::LinearOrder(order.into_iter().rev().collect());
            let expected = Element::basis_element(MonoidId::L, g.clone(), rev).scale(&coeff);
            assert_eq!(antipode(&x, Method::Takeuchi).unwrap(), expected, "{}", g.compact());
        }
    }
}
