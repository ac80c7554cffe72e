//! Exhaustive generation of the combinatorial families indexing each basis,
//! and the order relations between them.
//!
//! Generators work on a vertex subset of a graph so the structure maps can
//! enumerate bases of induced subgraphs without relabeling. Output order is
//! deterministic.

use crate::error::{Error, Result};
use crate::graph::{components_unchecked, Edge, Graph, OrderedBipartition, VertexPartition};
use crate::vset::VertexSet;

/// All `2^|V|` ordered pairs `(S, V∖S)`, by increasing `S`.
pub fn ordered_bipartitions(v: VertexSet) -> Vec<OrderedBipartition> {
    let mut out: Vec<OrderedBipartition> = v
        .subsets()
        .map(|s| OrderedBipartition {
            first: s,
            second: v - s,
        })
        .collect();
    out.reverse();
    out
}

/// Set compositions of `v` into nonempty blocks; the empty set has exactly
/// the empty composition.
pub fn ordered_set_partitions(v: VertexSet) -> Vec<Vec<VertexSet>> {
    compositions_with(v, &|_| true)
}

fn compositions_with(v: VertexSet, allowed: &dyn Fn(VertexSet) -> bool) -> Vec<Vec<VertexSet>> {
    if v.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut first_blocks: Vec<VertexSet> = v.subsets().filter(|s| !s.is_empty() && allowed(*s)).collect();
    first_blocks.sort();
    for first in first_blocks {
        for mut rest in compositions_with(v - first, allowed) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All set partitions of `v`.
pub fn set_partitions(v: VertexSet) -> Vec<VertexPartition> {
    partitions_with(v, &|_| true)
}

fn partitions_with(v: VertexSet, allowed: &dyn Fn(VertexSet) -> bool) -> Vec<VertexPartition> {
    fn rec(v: VertexSet, allowed: &dyn Fn(VertexSet) -> bool, acc: &mut Vec<VertexSet>, out: &mut Vec<VertexPartition>) {
        let Some(lo) = v.min() else {
            out.push(VertexPartition::from_blocks(acc.clone()));
            return;
        };
        let rest = v - VertexSet::singleton(lo);
        let mut choices: Vec<VertexSet> = rest.subsets().map(|s| s | VertexSet::singleton(lo)).collect();
        choices.sort();
        for block in choices.into_iter().filter(|&b| allowed(b)) {
            acc.push(block);
            rec(v - block, allowed, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(v, allowed, &mut Vec::new(), &mut out);
    out
}

/// All `|V|!` linear orders, lexicographically.
pub fn linear_orders(v: VertexSet) -> Vec<Vec<u8>> {
    fn rec(rest: VertexSet, acc: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for x in rest.iter() {
            acc.push(x as u8);
            rec(rest - VertexSet::singleton(x), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(v, &mut Vec::new(), &mut out);
    out
}

/// Whether the directed graph on `v` with the given arcs has no directed cycle.
pub fn is_acyclic(v: VertexSet, arcs: &[Edge]) -> bool {
    let mut out = [0u64; 64];
    for &(a, b) in arcs {
        out[a as usize] |= 1 << b;
    }
    let mut alive = v.bits();
    loop {
        let sinks: u64 = VertexSet(alive).iter().filter(|&x| out[x] & alive == 0).fold(0, |a, x| a | 1 << x);
        if sinks == 0 {
            return alive == 0;
        }
        alive &= !sinks;
    }
}

/// Acyclic orientations of the edges of `g` inside `v`: every orientation
/// is generated and those with a directed cycle are discarded.
pub fn acyclic_orientations(g: &Graph, v: VertexSet) -> Vec<Vec<Edge>> {
    acyclic_orientations_of(v, &g.edges_within(v))
}

pub(crate) fn acyclic_orientations_of(v: VertexSet, edges: &[Edge]) -> Vec<Vec<Edge>> {
    assert!(edges.len() < 32, "too many edges to enumerate orientations");
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << edges.len()) {
        let mut arcs: Vec<Edge> = edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (b, a) } else { (a, b) })
            .collect();
        if is_acyclic(v, &arcs) {
            arcs.sort_unstable();
            out.push(arcs);
        }
    }
    out.sort();
    out
}

/// Number of acyclic orientations of the graph with adjacency rows `adj`
/// (vertices `0..adj.len()`).
pub(crate) fn count_acyclic_orientations(adj: &[u64]) -> u64 {
    let v = VertexSet::full(adj.len());
    let edges: Vec<Edge> = (0..adj.len())
        .flat_map(|u| VertexSet(adj[u]).iter().filter(move |&w| w > u).map(move |w| (u as u8, w as u8)))
        .collect();
    acyclic_orientations_of(v, &edges).len() as u64
}

pub(crate) fn is_independent(g: &Graph, b: VertexSet) -> bool {
    b.iter().all(|u| g.neighbors(u).is_disjoint(b))
}

/// Set partitions of `v` with no edge of `g` inside a block.
pub fn stable_partitions(g: &Graph, v: VertexSet) -> Vec<VertexPartition> {
    partitions_with(v, &|b| is_independent(g, b))
}

/// Set compositions of `v` whose blocks are independent in `g`.
pub fn stable_compositions(g: &Graph, v: VertexSet) -> Vec<Vec<VertexSet>> {
    compositions_with(v, &|b| is_independent(g, b))
}

fn is_connected(g: &Graph, b: VertexSet) -> bool {
    let Some(start) = b.min() else {
        return true;
    };
    let mut reached = VertexSet::singleton(start);
    loop {
        let next = reached.iter().fold(reached, |acc, u| acc | (g.neighbors(u) & b));
        if next == reached {
            return reached == b;
        }
        reached = next;
    }
}

/// `F(π)`: the union of the induced edge sets of the blocks of `π`.
pub fn partition_edges(g: &Graph, pi: &VertexPartition) -> Vec<Edge> {
    let mut out: Vec<Edge> = pi.blocks().iter().flat_map(|&b| g.edges_within(b)).collect();
    out.sort_unstable();
    out
}

/// Whether `f ⊆ E(G_v)` equals the union of the induced edge sets of the
/// components of `(v, f)`.
pub fn is_flat(g: &Graph, v: VertexSet, f: &[Edge]) -> bool {
    if !f.iter().all(|&(a, b)| v.contains(a as usize) && v.contains(b as usize) && g.adjacent(a as usize, b as usize)) {
        return false;
    }
    let pi = components_unchecked(v, f);
    let closure: usize = pi.blocks().iter().map(|&b| g.edge_count_within(b)).sum();
    closure == f.len()
}

/// Flats of `G_v`. Each flat is `F(π)` for exactly one partition `π` whose
/// blocks induce connected subgraphs, which is how they are generated.
pub fn flats(g: &Graph, v: VertexSet) -> Vec<Vec<Edge>> {
    let mut out: Vec<Vec<Edge>> = partitions_with(v, &|b| is_connected(g, b))
        .iter()
        .map(|pi| partition_edges(g, pi))
        .collect();
    out.sort();
    out
}

pub fn is_matching(f: &[Edge]) -> bool {
    let mut used = VertexSet::EMPTY;
    for &(a, b) in f {
        let e: VertexSet = [a as usize, b as usize].into_iter().collect();
        if !used.is_disjoint(e) {
            return false;
        }
        used = used | e;
    }
    true
}

/// All matchings of `G_v`, including the empty one.
pub fn matchings(g: &Graph, v: VertexSet) -> Vec<Vec<Edge>> {
    fn rec(edges: &[Edge], i: usize, used: VertexSet, acc: &mut Vec<Edge>, out: &mut Vec<Vec<Edge>>) {
        if i == edges.len() {
            out.push(acc.clone());
            return;
        }
        rec(edges, i + 1, used, acc, out);
        let (a, b) = edges[i];
        let e: VertexSet = [a as usize, b as usize].into_iter().collect();
        if used.is_disjoint(e) {
            acc.push(edges[i]);
            rec(edges, i + 1, used | e, acc, out);
            acc.pop();
        }
    }
    let edges = g.edges_within(v);
    let mut out = Vec::new();
    rec(&edges, 0, VertexSet::EMPTY, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Refinement order on set partitions.
pub fn partition_refines(sigma: &VertexPartition, tau: &VertexPartition) -> Result<bool> {
    sigma.refines(tau)
}

/// Bond-lattice order: inclusion of flats.
pub fn flat_leq(f1: &[Edge], f2: &[Edge], g: &Graph) -> Result<bool> {
    for f in [f1, f2] {
        if !is_flat(g, g.vertices(), f) {
            return Err(Error::InvalidKey("edge set is not a flat of the graph".into()));
        }
    }
    Ok(f1.iter().all(|e| f2.binary_search(e).is_ok()))
}

/// `c1 ≤ c2` iff `c2` arises from `c1` by merging runs of consecutive blocks.
pub fn composition_refines(c1: &[VertexSet], c2: &[VertexSet]) -> Result<bool> {
    let ground = |c: &[VertexSet]| c.iter().fold(VertexSet::EMPTY, |a, &b| a | b);
    if ground(c1) != ground(c2) {
        return Err(Error::Mismatch("compositions of different ground sets".into()));
    }
    Ok(composition_refines_unchecked(c1, c2))
}

pub(crate) fn composition_refines_unchecked(c1: &[VertexSet], c2: &[VertexSet]) -> bool {
    let mut blocks = c1.iter();
    for &target in c2 {
        let mut acc = VertexSet::EMPTY;
        while acc != target {
            match blocks.next() {
                Some(&b) if b.is_subset(target) => acc = acc | b,
                _ => return false,
            }
        }
    }
    blocks.next().is_none()
}

/// All compositions refining `c`: concatenations of compositions of its blocks.
pub fn composition_refinements(c: &[VertexSet]) -> Vec<Vec<VertexSet>> {
    let mut out = vec![Vec::new()];
    for &b in c {
        let parts = ordered_set_partitions(b);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                parts.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(p);
                    v
                })
            })
            .collect();
    }
    out
}

/// All partitions refining `pi`.
pub fn partition_refinements(pi: &VertexPartition) -> Vec<VertexPartition> {
    let mut out = vec![Vec::new()];
    for &b in pi.blocks() {
        let parts = set_partitions(b);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<VertexSet>| {
                parts.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(p.blocks());
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(VertexPartition::from_blocks).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// Brute-force set partitions: assign each vertex a block label by
    /// restricted growth strings.
    fn brute_partitions(n: usize) -> usize {
        fn rec(i: usize, n: usize, max: usize) -> usize {
            if i == n {
                return 1;
            }
            (0..=max + 1).map(|b| rec(i + 1, n, max.max(b))).sum()
        }
        if n == 0 {
            1
        } else {
            rec(1, n, 0)
        }
    }

    /// Brute-force ordered set partitions: surjections onto `0..k`.
    fn brute_compositions(n: usize) -> usize {
        let mut total = 0;
        for k in 0..=n {
            let mut count = 0;
            let mut f = vec![0usize; n];
            loop {
                let mut hit = vec![false; k];
                for &x in &f {
                    if x < k {
                        hit[x] = true;
                    }
                }
                if f.iter().all(|&x| x < k) && hit.iter().all(|&h| h) {
                    count += 1;
                }
                let mut i = 0;
                while i < n {
                    f[i] += 1;
                    if f[i] <= k {
                        break;
                    }
                    f[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
            if n == 0 {
                count = usize::from(k == 0);
            }
            total += count;
        }
        total
    }

    fn brute_flats(g: &Graph) -> Vec<Vec<Edge>> {
        let edges = g.edges();
        let mut out = Vec::new();
        for mask in 0u32..(1 << edges.len()) {
            let f: Vec<Edge> = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let pi = components_unchecked(g.vertices(), &f);
            let mut closure: Vec<Edge> = pi.blocks().iter().flat_map(|&b| g.edges_within(b)).collect();
            closure.sort_unstable();
            if closure == f {
                out.push(f);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn bipartitions() {
        let v = VertexSet::full(2);
        let b = ordered_bipartitions(v);
        let pairs: Vec<(u64, u64)> = b.iter().map(|p| (p.first.bits(), p.second.bits())).collect();
        assert_eq!(pairs, vec![(0, 3), (1, 2), (2, 1), (3, 0)]);
        assert_eq!(ordered_bipartitions(VertexSet::EMPTY).len(), 1);
        assert_eq!(ordered_bipartitions(VertexSet::full(3)).len(), 8);
    }

    #[test]
    fn compositions_match_brute_force() {
        for n in 0..=5 {
            assert_eq!(ordered_set_partitions(VertexSet::full(n)).len(), brute_compositions(n), "n={n}");
        }
        assert_eq!(ordered_set_partitions(VertexSet::full(2)).len(), 3);
        assert_eq!(ordered_set_partitions(VertexSet::full(3)).len(), 13);
        assert_eq!(ordered_set_partitions(VertexSet::EMPTY), vec![Vec::<VertexSet>::new()]);
    }

    #[test]
    fn partitions_match_brute_force() {
        for n in 0..=6 {
            assert_eq!(set_partitions(VertexSet::full(n)).len(), brute_partitions(n), "n={n}");
        }
        assert_eq!(set_partitions(VertexSet::full(3)).len(), 5);
        assert_eq!(set_partitions(VertexSet::full(4)).len(), 15);
        assert_eq!(set_partitions(VertexSet::EMPTY).len(), 1);
    }

    #[test]
    fn linear_order_counts() {
        assert_eq!(linear_orders(VertexSet::full(3)).len(), 6);
        assert_eq!(linear_orders(VertexSet::EMPTY).len(), 1);
        assert_eq!(linear_orders(VertexSet::full(4)).len(), 24);
        assert_eq!(linear_orders(VertexSet::full(3))[1], vec![0, 2, 1]);
    }

    #[test]
    fn acyclic_orientation_examples() {
        let k3 = fixtures::complete(3);
        assert_eq!(acyclic_orientations(&k3, k3.vertices()).len(), 6);
        let p3 = fixtures::path3();
        assert_eq!(acyclic_orientations(&p3, p3.vertices()).len(), 4);
        let d = fixtures::discrete(4);
        assert_eq!(acyclic_orientations(&d, d.vertices()), vec![Vec::<Edge>::new()]);
        assert!(!is_acyclic(VertexSet::full(3), &[(0, 1), (1, 2), (2, 0)]));
    }

    #[test]
    fn stable_examples() {
        let p3 = fixtures::path3();
        let sp = stable_partitions(&p3, p3.vertices());
        assert_eq!(sp.len(), 2);
        assert_eq!(sp[0].blocks(), [VertexSet(0b001), VertexSet(0b010), VertexSet(0b100)]);
        assert_eq!(sp[1].blocks(), [VertexSet(0b101), VertexSet(0b010)]);
        assert_eq!(stable_partitions(&fixtures::complete(4), VertexSet::full(4)).len(), 1);
        assert_eq!(stable_partitions(&fixtures::discrete(4), VertexSet::full(4)).len(), 15);

        assert_eq!(stable_compositions(&p3, p3.vertices()).len(), 8);
        assert_eq!(stable_compositions(&fixtures::complete(4), VertexSet::full(4)).len(), 24);
        assert_eq!(stable_compositions(&Graph::empty(), VertexSet::EMPTY).len(), 1);
        // brute force against the filter definition
        let all = ordered_set_partitions(p3.vertices());
        let filtered = all.iter().filter(|c| c.iter().all(|&b| p3.edge_count_within(b) == 0)).count();
        assert_eq!(filtered, 8);
    }

    #[test]
    fn flat_examples() {
        let k3 = fixtures::complete(3);
        assert_eq!(flats(&k3, k3.vertices()).len(), 5);
        assert!(!is_flat(&k3, k3.vertices(), &[(0, 1), (1, 2)]));
        let p3 = fixtures::path3();
        assert_eq!(flats(&p3, p3.vertices()), vec![vec![], vec![(0, 1)], vec![(0, 1), (1, 2)], vec![(1, 2)]]);
        assert_eq!(flats(&fixtures::discrete(3), VertexSet::full(3)), vec![Vec::<Edge>::new()]);
    }

    #[test]
    fn flats_match_subset_filter_on_small_graphs() {
        for g in crate::verify::corpus(4) {
            assert_eq!(flats(&g, g.vertices()), brute_flats(&g), "{g:?}");
        }
        let fm = fixtures::funmath();
        assert_eq!(flats(&fm, fm.vertices()), brute_flats(&fm));
    }

    #[test]
    fn matching_examples() {
        let p3 = fixtures::path3();
        assert_eq!(matchings(&p3, p3.vertices()).len(), 3);
        assert_eq!(matchings(&fixtures::complete(3), VertexSet::full(3)).len(), 4);
        assert_eq!(matchings(&fixtures::complete(2), VertexSet::full(2)).len(), 2);
        assert!(!is_matching(&[(0, 1), (1, 2)]));
    }

    #[test]
    fn order_relations() {
        let v = VertexSet::full(3);
        let single = VertexPartition::singletons(v);
        let ab_c = VertexPartition::from_blocks(vec![VertexSet(0b011), VertexSet(0b100)]);
        let ac_b = VertexPartition::from_blocks(vec![VertexSet(0b101), VertexSet(0b010)]);
        assert_eq!(partition_refines(&single, &ab_c), Ok(true));
        assert_eq!(partition_refines(&ab_c, &ac_b), Ok(false));
        assert_eq!(partition_refines(&ab_c, &ab_c), Ok(true));

        let p3 = fixtures::path3();
        assert_eq!(flat_leq(&[], &[(0, 1)], &p3), Ok(true));
        assert_eq!(flat_leq(&[(0, 1)], &[(1, 2)], &p3), Ok(false));
        assert_eq!(flat_leq(&[(1, 2)], &[(1, 2)], &p3), Ok(true));
        let k3 = fixtures::complete(3);
        assert!(flat_leq(&[(0, 1), (1, 2)], &[], &k3).is_err());

        let (a, b, c) = (VertexSet(1), VertexSet(2), VertexSet(4));
        assert_eq!(composition_refines(&[a, b, c], &[a | b, c]), Ok(true));
        assert_eq!(composition_refines(&[b, a, c], &[a | b, c]), Ok(true));
        assert_eq!(composition_refines(&[a, c, b], &[a | b, c]), Ok(false));
        assert!(composition_refines(&[a, b], &[a | b, c]).is_err());
    }

    #[test]
    fn refinement_generators_agree_with_order() {
        let v = VertexSet::full(4);
        for c in ordered_set_partitions(v) {
            let gen = composition_refinements(&c);
            let filt: Vec<_> = ordered_set_partitions(v)
                .into_iter()
                .filter(|d| composition_refines_unchecked(d, &c))
                .collect();
            assert_eq!(gen.len(), filt.len());
            assert!(gen.iter().all(|d| filt.contains(d)));
        }
        for p in set_partitions(v) {
            let gen = partition_refinements(&p);
            let filt = set_partitions(v).into_iter().filter(|s| s.refines_unchecked(&p)).count();
            assert_eq!(gen.len(), filt);
        }
    }
}
