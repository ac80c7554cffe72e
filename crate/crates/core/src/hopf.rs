//! Product, coproduct, unit, counit and basis change for every monoid of the
//! catalog.
//!
//! Internally, keys on an induced subgraph `G_S` keep the vertex indices of
//! `G` and the subgraph is just the mask `S`. Restriction is intersection and
//! the product is a union, so nothing gets relabeled on the hot paths. The
//! public functions below take keys indexed by `G`; only
//! [`coproduct_component`] materializes `G_S` and `G_T`, because a
//! [`TensorElement`] carries its factor graphs.

use std::collections::HashMap;
use std::sync::Arc;

use crate::enumerate::{
    acyclic_orientations, flats, is_acyclic, is_flat, is_independent, is_matching, linear_orders,
    matchings, ordered_set_partitions, partition_refinements, set_partitions, stable_compositions,
    stable_partitions,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, OrderedBipartition, VertexPartition};
use crate::key::BasisKey;
use crate::module::{Element, LinComb, TensorElement};
use crate::monoid::MonoidId;
use crate::poly::{Monomial, QtPoly};
use crate::vset::VertexSet;

/// `q^{e(G,S,T)} t^{e(Ḡ,S,T)}` for disjoint `s`, `t`.
pub(crate) fn braiding_monomial(g: &Graph, s: VertexSet, t: VertexSet) -> Monomial {
    Monomial::new(g.cross(s, t), g.cross_complement(s, t))
}

/// The braiding coefficient `q^{e(G,S,T)} t^{e(Ḡ,S,T)}`.
pub fn braiding_coeff(g: &Graph, s: VertexSet, t: VertexSet) -> Result<QtPoly> {
    g.crossing_edges(s, t)?;
    Ok(braiding_monomial(g, s, t).into())
}

/// Basis of `m[G_v]` in enumeration order.
pub(crate) fn basis_raw(m: MonoidId, g: &Graph, v: VertexSet) -> Vec<BasisKey> {
    match m {
        MonoidId::L => linear_orders(v).into_iter().map(BasisKey::LinearOrder).collect(),
        MonoidId::AO => acyclic_orientations(g, v).into_iter().map(BasisKey::AcyclicOrientation).collect(),
        MonoidId::Sigma => ordered_set_partitions(v).into_iter().map(BasisKey::SetComposition).collect(),
        MonoidId::SSigma => stable_compositions(g, v).into_iter().map(BasisKey::SetComposition).collect(),
        MonoidId::PiM => set_partitions(v).into_iter().map(BasisKey::SetPartitionM).collect(),
        MonoidId::PiP => set_partitions(v).into_iter().map(BasisKey::SetPartitionP).collect(),
        MonoidId::SPiM => stable_partitions(g, v).into_iter().map(BasisKey::SetPartitionM).collect(),
        MonoidId::SPiP => stable_partitions(g, v).into_iter().map(BasisKey::SetPartitionP).collect(),
        MonoidId::FlM => flats(g, v).into_iter().map(BasisKey::FlatM).collect(),
        MonoidId::FlP => flats(g, v).into_iter().map(BasisKey::FlatP).collect(),
        MonoidId::MatchM => matchings(g, v).into_iter().map(BasisKey::MatchingM).collect(),
        MonoidId::MatchP => matchings(g, v).into_iter().map(BasisKey::MatchingP).collect(),
        MonoidId::E => vec![BasisKey::Unit],
    }
}

/// The basis of `m[G]`, sorted by literal.
pub fn basis(m: MonoidId, g: &Graph) -> Vec<BasisKey> {
    let mut keys: Vec<(String, BasisKey)> = basis_raw(m, g, g.vertices())
        .into_iter()
        .map(|k| (k.to_literal(g), k))
        .collect();
    keys.sort_by(|a, b| a.0.cmp(&b.0));
    keys.into_iter().map(|(_, k)| k).collect()
}

fn sorted_strict<T: Ord>(v: &[T]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

fn composition_covers(c: &[VertexSet], v: VertexSet) -> bool {
    let mut seen = VertexSet::EMPTY;
    for &b in c {
        if b.is_empty() || !b.is_disjoint(seen) {
            return false;
        }
        seen = seen | b;
    }
    seen == v
}

fn partition_ok(p: &VertexPartition, v: VertexSet) -> bool {
    VertexPartition::new(p.blocks().to_vec(), v).is_ok_and(|q| &q == p)
}

/// Whether `k` is a basis key of `m[G_v]` in canonical form.
pub(crate) fn is_valid_raw(m: MonoidId, g: &Graph, v: VertexSet, k: &BasisKey) -> bool {
    if k.kind() != m.key_kind() {
        return false;
    }
    let stable = |blocks: &[VertexSet]| blocks.iter().all(|&b| is_independent(g, b));
    match k {
        BasisKey::LinearOrder(o) => {
            let set: VertexSet = o.iter().map(|&x| x as usize).collect();
            set == v && set.len() == o.len()
        }
        BasisKey::AcyclicOrientation(arcs) => {
            if !sorted_strict(arcs) {
                return false;
            }
            let mut undirected: Vec<Edge> = arcs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            undirected.sort_unstable();
            undirected == g.edges_within(v) && is_acyclic(v, arcs)
        }
        BasisKey::SetComposition(c) => composition_covers(c, v) && (m != MonoidId::SSigma || stable(c)),
        BasisKey::SetPartitionM(p) | BasisKey::SetPartitionP(p) => {
            partition_ok(p, v) && (!matches!(m, MonoidId::SPiM | MonoidId::SPiP) || stable(p.blocks()))
        }
        BasisKey::FlatM(f) | BasisKey::FlatP(f) => sorted_strict(f) && is_flat(g, v, f),
        BasisKey::MatchingM(f) | BasisKey::MatchingP(f) => {
            sorted_strict(f)
                && is_matching(f)
                && f.iter().all(|&(a, b)| {
                    a < b && v.contains(a as usize) && v.contains(b as usize) && g.adjacent(a as usize, b as usize)
                })
        }
        BasisKey::Unit => true,
    }
}

/// Checks that `k` is a basis key of `m[G]`.
pub fn validate_key(m: MonoidId, g: &Graph, k: &BasisKey) -> Result<()> {
    validate_on(m, g, g.vertices(), k)
}

fn validate_on(m: MonoidId, g: &Graph, v: VertexSet, k: &BasisKey) -> Result<()> {
    if k.kind() != m.key_kind() {
        return Err(Error::InvalidKey(format!("{} key for monoid {m}", k.kind())));
    }
    if !is_valid_raw(m, g, v, k) {
        return Err(Error::InvalidKey(format!(
            "`{}` is not a {m} basis key on {{{}}}",
            k.to_literal(g),
            g.set_labels(v).join(",")
        )));
    }
    Ok(())
}

/// `k|_s`: the restriction of a key to the vertices in `s`.
pub(crate) fn restrict(k: &BasisKey, s: VertexSet) -> BasisKey {
    let inside = |&(a, b): &Edge| s.contains(a as usize) && s.contains(b as usize);
    match k {
        BasisKey::LinearOrder(o) => BasisKey::LinearOrder(o.iter().copied().filter(|&x| s.contains(x as usize)).collect()),
        BasisKey::AcyclicOrientation(arcs) => BasisKey::AcyclicOrientation(arcs.iter().copied().filter(inside).collect()),
        BasisKey::SetComposition(c) => {
            BasisKey::SetComposition(c.iter().map(|&b| b & s).filter(|b| !b.is_empty()).collect())
        }
        BasisKey::SetPartitionM(p) | BasisKey::SetPartitionP(p) => k.with_partition(p.restrict(s)),
        BasisKey::FlatM(f) | BasisKey::FlatP(f) | BasisKey::MatchingM(f) | BasisKey::MatchingP(f) => {
            k.with_edges(f.iter().copied().filter(inside).collect())
        }
        BasisKey::Unit => BasisKey::Unit,
    }
}

fn merge_edges(a: &[Edge], b: &[Edge]) -> Vec<Edge> {
    let mut out: Vec<Edge> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out
}

/// `μ^{S,T}(x ⊗ y)`; every product of the catalog sends a pair of basis keys
/// to a single basis key with coefficient 1.
pub(crate) fn mul_raw(m: MonoidId, g: &Graph, s: VertexSet, t: VertexSet, x: &BasisKey, y: &BasisKey) -> BasisKey {
    match (x, y) {
        (BasisKey::LinearOrder(a), BasisKey::LinearOrder(b)) => {
            BasisKey::LinearOrder(a.iter().chain(b).copied().collect())
        }
        (BasisKey::AcyclicOrientation(a), BasisKey::AcyclicOrientation(b)) => {
            let mut arcs = merge_edges(a, b);
            for u in s.iter() {
                for w in (g.neighbors(u) & t).iter() {
                    arcs.push((u as u8, w as u8));
                }
            }
            arcs.sort_unstable();
            BasisKey::AcyclicOrientation(arcs)
        }
        (BasisKey::SetComposition(a), BasisKey::SetComposition(b)) => {
            BasisKey::SetComposition(a.iter().chain(b).copied().collect())
        }
        (BasisKey::SetPartitionM(a), BasisKey::SetPartitionM(b))
        | (BasisKey::SetPartitionP(a), BasisKey::SetPartitionP(b)) => x.with_partition(VertexPartition::from_blocks(
            a.blocks().iter().chain(b.blocks()).copied().collect(),
        )),
        (BasisKey::FlatM(a), BasisKey::FlatM(b))
        | (BasisKey::FlatP(a), BasisKey::FlatP(b))
        | (BasisKey::MatchingM(a), BasisKey::MatchingM(b))
        | (BasisKey::MatchingP(a), BasisKey::MatchingP(b)) => x.with_edges(merge_edges(a, b)),
        (BasisKey::Unit, BasisKey::Unit) => BasisKey::Unit,
        _ => unreachable!("{m}: mismatched key kinds {:?} and {:?}", x.kind(), y.kind()),
    }
}

/// Number of pairs `(s, t) ∈ S × T` with `s` strictly after `t`, split into
/// pairs adjacent in `G` and pairs adjacent in `Ḡ`.
fn inversions<'a>(g: &Graph, s: VertexSet, t: VertexSet, levels: impl Iterator<Item = VertexSet> + 'a) -> Monomial {
    let (mut qe, mut te) = (0u32, 0u32);
    let mut seen_t = VertexSet::EMPTY;
    for level in levels {
        let here_s = level & s;
        qe += g.cross(here_s, seen_t);
        te += g.cross_complement(here_s, seen_t);
        seen_t = seen_t | (level & t);
    }
    Monomial::new(qe, te)
}

/// `Δ^{S,T}(k)` as `coeff · k|_S ⊗ k|_T`, or `None` when the component is zero.
pub(crate) fn comul_raw(
    m: MonoidId,
    g: &Graph,
    s: VertexSet,
    t: VertexSet,
    k: &BasisKey,
) -> Option<(Monomial, BasisKey, BasisKey)> {
    let coeff = match k {
        BasisKey::LinearOrder(o) => inversions(g, s, t, o.iter().map(|&x| VertexSet::singleton(x as usize))),
        BasisKey::AcyclicOrientation(arcs) => {
            let back = arcs
                .iter()
                .filter(|&&(a, b)| t.contains(a as usize) && s.contains(b as usize))
                .count();
            Monomial::new(back as u32, 0)
        }
        BasisKey::SetComposition(c) => inversions(g, s, t, c.iter().copied()),
        BasisKey::SetPartitionP(p) => {
            if p.blocks().iter().any(|&b| !b.is_disjoint(s) && !b.is_disjoint(t)) {
                return None;
            }
            Monomial::ONE
        }
        BasisKey::FlatP(f) | BasisKey::MatchingP(f) => {
            let crossing = |&(a, b): &Edge| s.contains(a as usize) != s.contains(b as usize);
            if f.iter().any(crossing) {
                return None;
            }
            Monomial::ONE
        }
        _ => Monomial::ONE,
    };
    debug_assert!(m.key_kind() == k.kind());
    Some((coeff, restrict(k, s), restrict(k, t)))
}

fn check_split(g: &Graph, split: OrderedBipartition) -> Result<()> {
    OrderedBipartition::new(split.first, split.second, g.vertices()).map(|_| ())
}

/// `μ^{S,T}(x ⊗ y)` on `G`. The keys `x` and `y` are indexed by `G` and must
/// be basis keys of `G_S` and `G_T` respectively.
pub fn product(m: MonoidId, g: &Arc<Graph>, split: OrderedBipartition, x: &BasisKey, y: &BasisKey) -> Result<Element> {
    check_split(g, split)?;
    validate_on(m, g, split.first, x)?;
    validate_on(m, g, split.second, y)?;
    let k = mul_raw(m, g, split.first, split.second, x, y);
    Ok(Element::basis_element(m, g.clone(), k))
}

/// `Δ^{S,T}(k)` as an element of `m[G_S] ⊗ m[G_T]`.
pub fn coproduct_component(m: MonoidId, g: &Graph, split: OrderedBipartition, k: &BasisKey) -> Result<TensorElement> {
    check_split(g, split)?;
    validate_key(m, g, k)?;
    let mut terms = LinComb::zero();
    if let Some((c, a, b)) = comul_raw(m, g, split.first, split.second, k) {
        terms.add_monomial((a, b), c, 1);
    }
    Ok(materialize_tensor(m, g, split, terms))
}

/// `Δ^{S,T}` extended linearly to an element.
pub fn coproduct(x: &Element, split: OrderedBipartition) -> Result<TensorElement> {
    let g = x.graph();
    check_split(g, split)?;
    let mut terms = LinComb::zero();
    for (k, c) in x.terms().iter() {
        if let Some((mono, a, b)) = comul_raw(x.monoid(), g, split.first, split.second, k) {
            terms.add_scaled((a, b), c, mono, 1);
        }
    }
    Ok(materialize_tensor(x.monoid(), g, split, terms))
}

fn materialize_tensor(
    m: MonoidId,
    g: &Graph,
    split: OrderedBipartition,
    terms: LinComb<(BasisKey, BasisKey)>,
) -> TensorElement {
    let (gs, map_s) = g.induced_with_map(split.first);
    let (gt, map_t) = g.induced_with_map(split.second);
    let inverse = |map: &[u8]| {
        let mut pos = [0usize; 64];
        for (i, &v) in map.iter().enumerate() {
            pos[v as usize] = i;
        }
        pos
    };
    let (ps, pt) = (inverse(&map_s), inverse(&map_t));
    let local = terms
        .iter()
        .map(|((a, b), c)| ((a.map_vertices(|v| ps[v]), b.map_vertices(|v| pt[v])), c.clone()))
        .collect();
    TensorElement::new(m, Arc::new(gs), Arc::new(gt), local)
}

/// `μ^{S,T}` extended bilinearly; both elements must live on `G`.
pub fn product_elements(x: &Element, y: &Element, split: OrderedBipartition) -> Result<Element> {
    if x.monoid() != y.monoid() {
        return Err(Error::Mismatch(format!("monoids {} and {}", x.monoid(), y.monoid())));
    }
    let (m, g) = (x.monoid(), x.graph());
    if y.graph() != g {
        return Err(Error::Mismatch("factors live on different graphs".into()));
    }
    check_split(g, split)?;
    for (k, set) in x.terms().keys().map(|k| (k, split.first)).chain(y.terms().keys().map(|k| (k, split.second))) {
        validate_on(m, g, set, k)?;
    }
    let mut out = LinComb::zero();
    for (a, ca) in x.terms().iter() {
        for (b, cb) in y.terms().iter() {
            out.add(mul_raw(m, g, split.first, split.second, a, b), &(ca * cb));
        }
    }
    Ok(Element::new(m, g.clone(), out))
}

/// The unit: the empty structure on the empty graph.
pub fn unit(m: MonoidId) -> Element {
    Element::basis_element(m, Arc::new(Graph::empty()), m.empty_key())
}

/// The counit: the coefficient of the empty structure on the empty graph,
/// and zero on every nonempty graph.
pub fn counit(x: &Element) -> QtPoly {
    if x.graph().is_empty() {
        x.coeff(&x.monoid().empty_key())
    } else {
        QtPoly::zero()
    }
}

fn basis_pair(from: MonoidId, to: MonoidId) -> Option<bool> {
    use MonoidId::*;
    // `Some(true)` when converting out of the m/M basis.
    match (from, to) {
        (PiM, PiP) | (SPiM, SPiP) | (FlM, FlP) | (MatchM, MatchP) => Some(true),
        (PiP, PiM) | (SPiP, SPiM) | (FlP, FlM) | (MatchP, MatchM) => Some(false),
        _ => None,
    }
}

/// Keys strictly or weakly below `k` in the refinement or bond order, as
/// keys of the other basis.
fn lower_set(g: &Graph, v: VertexSet, k: &BasisKey) -> Vec<BasisKey> {
    match k {
        BasisKey::SetPartitionM(p) => partition_refinements(p).into_iter().map(BasisKey::SetPartitionP).collect(),
        BasisKey::SetPartitionP(p) => partition_refinements(p).into_iter().map(BasisKey::SetPartitionM).collect(),
        BasisKey::FlatM(f) | BasisKey::FlatP(f) => {
            // Flats of G below F are exactly the flats of (V, F).
            let h = Graph::from_indices(g.labels().to_vec(), f.iter().map(|&(a, b)| (a as usize, b as usize)));
            let swap = |e: Vec<Edge>| if matches!(k, BasisKey::FlatM(_)) { BasisKey::FlatP(e) } else { BasisKey::FlatM(e) };
            flats(&h, v).into_iter().map(swap).collect()
        }
        BasisKey::MatchingM(f) | BasisKey::MatchingP(f) => {
            let to_p = matches!(k, BasisKey::MatchingM(_));
            (0u64..1 << f.len())
                .map(|mask| {
                    let sub: Vec<Edge> = f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                    if to_p {
                        BasisKey::MatchingP(sub)
                    } else {
                        BasisKey::MatchingM(sub)
                    }
                })
                .collect()
        }
        _ => unreachable!("no basis change for {:?}", k.kind()),
    }
}

/// Swaps the basis tag of a key without changing its structure.
fn retag(k: &BasisKey) -> BasisKey {
    match k {
        BasisKey::SetPartitionM(p) => BasisKey::SetPartitionP(p.clone()),
        BasisKey::SetPartitionP(p) => BasisKey::SetPartitionM(p.clone()),
        BasisKey::FlatM(f) => BasisKey::FlatP(f.clone()),
        BasisKey::FlatP(f) => BasisKey::FlatM(f.clone()),
        BasisKey::MatchingM(f) => BasisKey::MatchingP(f.clone()),
        BasisKey::MatchingP(f) => BasisKey::MatchingM(f.clone()),
        _ => unreachable!(),
    }
}

/// `m_x = Σ_{y ≤ x} p_y`, expanded.
pub(crate) fn m_to_p_raw(g: &Graph, v: VertexSet, k: &BasisKey) -> LinComb<BasisKey> {
    lower_set(g, v, k).into_iter().map(|y| (y, QtPoly::one())).collect()
}

/// `p_x` in the m basis, by `p_x = m_x − Σ_{y < x} p_y` with memoization.
pub(crate) fn p_to_m_raw(
    g: &Graph,
    v: VertexSet,
    k: &BasisKey,
    memo: &mut HashMap<BasisKey, LinComb<BasisKey>>,
) -> LinComb<BasisKey> {
    if let Some(hit) = memo.get(k) {
        return hit.clone();
    }
    let mut out = LinComb::single(retag(k), QtPoly::one());
    let minus = QtPoly::constant(-1);
    for below in lower_set(g, v, k) {
        let below_p = retag(&below);
        if &below_p == k {
            continue;
        }
        let sub = p_to_m_raw(g, v, &below_p, memo);
        out.add_comb(&sub, &minus);
    }
    memo.insert(k.clone(), out.clone());
    out
}

/// Rewrites `x` in the other basis of the same species: m ↔ p for
/// (stable) partitions, M ↔ P for flats and matchings.
pub fn basis_change(from: MonoidId, to: MonoidId, x: &Element) -> Result<Element> {
    if x.monoid() != from {
        return Err(Error::Mismatch(format!("element is in {}, not {from}", x.monoid())));
    }
    let expand = basis_pair(from, to)
        .ok_or_else(|| Error::Unsupported(format!("no basis change from {from} to {to}")))?;
    let g = x.graph();
    let v = g.vertices();
    let mut memo = HashMap::new();
    let out = crate::module::linear_extend(x.terms(), |k| {
        Some(if expand { m_to_p_raw(g, v, k) } else { p_to_m_raw(g, v, k, &mut memo) })
    })?;
    Ok(Element::new(to, g.clone(), out))
}

/// Whether two monoids are the two bases of one species.
pub fn is_basis_pair(from: MonoidId, to: MonoidId) -> bool {
    basis_pair(from, to).is_some()
}
